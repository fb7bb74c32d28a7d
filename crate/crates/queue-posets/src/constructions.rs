//! Generators for the poset families used as lower-bound witnesses and
//! stress inputs: subdivided crowns, weak orders, the width and height
//! tower families, the height-2 counterexample with its rainbow extractor,
//! bipartite-graph posets, and the two four-element obstruction patterns.

use crate::diagram::UpwardDiagram;
use crate::error::{Error, Result};
use crate::layout::Rainbow;
use crate::poset::{LinearExtension, Poset};

/// Subdivided k-crown: elements `a1..ak`, `b1..bk`, `c1..ck` with covers
/// `ai ≺ bi`, `bi ≺ ci`, and the diagonals `ai ≺ c(i−1)` (cyclically, so
/// `a1 ≺ ck`). Its cover graph is a cycle of length 3k.
pub fn subdivided_crown(k: usize) -> Result<Poset> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "subdivided crown needs k >= 2, got {k}"
        )));
    }
    let mut labels = Vec::with_capacity(3 * k);
    for kind in ["a", "b", "c"] {
        for i in 1..=k {
            labels.push(format!("{kind}{i}"));
        }
    }
    let mut covers = Vec::with_capacity(3 * k);
    for i in 1..=k {
        covers.push((format!("a{i}"), format!("b{i}")));
        covers.push((format!("b{i}"), format!("c{i}")));
        let below = if i == 1 { k } else { i - 1 };
        covers.push((format!("a{i}"), format!("c{below}")));
    }
    Poset::from_relations(labels, covers)
}

/// Weak order: a chain of antichains with the given level sizes. Elements of
/// level `i` are below every element of every later level. Labels are a
/// level letter followed by a 1-based index, e.g. `a1..a3, b1..b3` for
/// `[3, 3]`.
pub fn weak_order(level_sizes: &[usize]) -> Result<Poset> {
    if level_sizes.is_empty() {
        return Err(Error::InvalidParameter("weak order needs at least one level".into()));
    }
    if let Some(pos) = level_sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidParameter(format!(
            "weak order level {pos} is empty"
        )));
    }
    let name = |level: usize, j: usize| -> String {
        if level < 26 {
            format!("{}{}", (b'a' + level as u8) as char, j + 1)
        } else {
            format!("l{}n{}", level, j + 1)
        }
    };
    let mut labels = Vec::new();
    for (level, &size) in level_sizes.iter().enumerate() {
        for j in 0..size {
            labels.push(name(level, j));
        }
    }
    let mut relations = Vec::new();
    for level in 1..level_sizes.len() {
        for x in 0..level_sizes[level - 1] {
            for y in 0..level_sizes[level] {
                relations.push((name(level - 1, x), name(level, y)));
            }
        }
    }
    Poset::from_relations(labels, relations)
}

struct RawDrawing {
    labels: Vec<String>,
    covers: Vec<(String, String)>,
    pos: Vec<(f64, f64)>,
    zero: String,
    one: String,
    y_span: f64,
    x_max: f64,
}

fn q_width_raw(w: usize) -> RawDrawing {
    if w == 1 {
        // The base of the tower is fixed as a two-element chain.
        return RawDrawing {
            labels: vec!["v0".into(), "v1".into()],
            covers: vec![("v0".into(), "v1".into())],
            pos: vec![(0.0, 0.0), (0.0, 1.0)],
            zero: "v0".into(),
            one: "v1".into(),
            y_span: 1.0,
            x_max: 0.0,
        };
    }
    let inner = q_width_raw(w - 1);
    let y_span = 2.0 * inner.y_span + 3.0;
    let x_max = y_span * (inner.x_max + 1.0);
    let mut labels = vec!["a".to_string(), "b".to_string(), "c".to_string()];
    let mut pos = vec![(0.0, 0.0), (x_max, y_span / 2.0), (0.0, y_span)];
    let mut covers: Vec<(String, String)> = vec![
        ("a".into(), "b".into()),
        ("b".into(), "c".into()),
        ("a".into(), format!("L{}", inner.zero)),
        (format!("L{}", inner.one), format!("U{}", inner.zero)),
        (format!("U{}", inner.one), "c".into()),
    ];
    for (copy, dy) in [("L", 1.0), ("U", 2.0 + inner.y_span)] {
        for (l, &(x, y)) in inner.labels.iter().zip(&inner.pos) {
            labels.push(format!("{copy}{l}"));
            pos.push((x, y + dy));
        }
        for (lo, hi) in &inner.covers {
            covers.push((format!("{copy}{lo}"), format!("{copy}{hi}")));
        }
    }
    RawDrawing {
        labels,
        covers,
        pos,
        zero: "a".into(),
        one: "c".into(),
        y_span,
        x_max,
    }
}

/// The width tower: `q_width(1)` is a two-element chain, and `q_width(w)`
/// stacks a lower and an upper copy of the previous poset between a new
/// bottom `a` and top `c`, with an extra midpoint `b` on a chain `a≺b≺c`
/// drawn as an ear to the right of both copies. The result has width `w`,
/// a single minimum and maximum, and `2·|previous|+3` elements, and comes
/// with a planar drawing whose outer boundary is the left spine plus the
/// outermost ear.
pub fn q_width(w: usize) -> Result<(Poset, UpwardDiagram)> {
    if w == 0 {
        return Err(Error::InvalidParameter("q_width needs w >= 1".into()));
    }
    let raw = q_width_raw(w);
    let poset = Poset::from_relations(raw.labels.clone(), raw.covers)?;
    let mut positions = vec![(0.0, 0.0); poset.n()];
    let mut hint = Vec::new();
    for (l, &p) in raw.labels.iter().zip(&raw.pos) {
        let i = poset.index_of(l).expect("generated label");
        positions[i] = p;
        if p.0 == 0.0 || l == "b" {
            hint.push(l.clone());
        }
    }
    let diagram = UpwardDiagram::new(poset.clone(), positions, Some(hint))
        .expect("generated drawing is valid");
    Ok((poset, diagram))
}

/// The height-2 poset whose every linear extension carries a 4-rainbow.
/// Start from the complete bipartite graph on `{a1,a2}` versus
/// `{b1..b10}`, then attach four new vertices `c{i}_{1..4}` to each
/// consecutive pair `bi, b(i+1)`; orient all edges away from the `b` side.
/// Returns the poset together with the bipartition (X = the `b`s, Y = the
/// rest). The cover graph is planar and bipartite by construction.
pub fn height2_counterexample() -> (Poset, Vec<String>, Vec<String>) {
    let mut labels: Vec<String> = vec!["a1".into(), "a2".into()];
    for i in 1..=10 {
        labels.push(format!("b{i}"));
    }
    for i in 1..=9 {
        for j in 1..=4 {
            labels.push(format!("c{i}_{j}"));
        }
    }
    let mut relations = Vec::new();
    for i in 1..=10 {
        relations.push((format!("b{i}"), "a1".to_string()));
        relations.push((format!("b{i}"), "a2".to_string()));
    }
    for i in 1..=9 {
        for j in 1..=4 {
            relations.push((format!("b{i}"), format!("c{i}_{j}")));
            relations.push((format!("b{}", i + 1), format!("c{i}_{j}")));
        }
    }
    let x: Vec<String> = (1..=10).map(|i| format!("b{i}")).collect();
    let mut y: Vec<String> = vec!["a1".into(), "a2".into()];
    for i in 1..=9 {
        for j in 1..=4 {
            y.push(format!("c{i}_{j}"));
        }
    }
    let p = Poset::from_relations(labels, relations).expect("construction is acyclic");
    (p, x, y)
}

/// Extracts a 4-rainbow from any linear extension of
/// [`height2_counterexample`], following the case analysis that proves the
/// lower bound. Covers of the returned rainbow are outermost first.
///
/// Writing `α1, α2` for `a1, a2` in extension order: take the first two and
/// last two `b`s in the extension, pick the smallest gap index `i` whose
/// pair `bi, b(i+1)` avoids all four, and among `c{i}_1..c{i}_4` pick the
/// lexicographically first pair lying in the same region relative to
/// `α1, α2` (below both, between, or above both). The pair's 2-rainbow over
/// `bi, b(i+1)` is completed to a 4-rainbow with covers into the `a`s on
/// whichever side the region leaves room.
pub fn counterexample_witness(ext: &LinearExtension) -> Result<Rainbow> {
    let (p, xs, _) = height2_counterexample();
    if !ext.is_extension_of(&p) {
        return Err(Error::NotALinearExtension {
            reason: "not a linear extension of the height-2 counterexample".into(),
        });
    }
    let idx = |l: &str| p.index_of(l).expect("counterexample label");
    let a1 = idx("a1");
    let a2 = idx("a2");
    let (alpha1, alpha2) = if ext.pos(a1) < ext.pos(a2) {
        (a1, a2)
    } else {
        (a2, a1)
    };

    let mut bs: Vec<usize> = xs.iter().map(|l| idx(l)).collect();
    bs.sort_by_key(|&b| ext.pos(b));
    let first_two = [bs[0], bs[1]];
    let last_two = [bs[8], bs[9]];
    let b_number = |b: usize| -> usize {
        p.label(b)[1..].parse::<usize>().expect("b label")
    };
    let blocked: Vec<usize> = first_two
        .iter()
        .chain(&last_two)
        .map(|&b| b_number(b))
        .collect();
    let gap = (1..=9)
        .find(|i| !blocked.contains(i) && !blocked.contains(&(i + 1)))
        .expect("four blocked numbers cannot cover nine gaps");

    // Region of an element relative to the two a's in the extension.
    let region = |v: usize| -> u8 {
        if ext.pos(v) < ext.pos(alpha1) {
            0
        } else if ext.pos(v) < ext.pos(alpha2) {
            1
        } else {
            2
        }
    };
    let cs: Vec<usize> = (1..=4).map(|j| idx(&format!("c{gap}_{j}"))).collect();
    let mut chosen = None;
    'outer: for u in 0..4 {
        for v in u + 1..4 {
            if region(cs[u]) == region(cs[v]) {
                chosen = Some((cs[u], cs[v]));
                break 'outer;
            }
        }
    }
    let (c1, c2) = chosen.expect("four elements in three regions share one");

    let (b_lo, b_hi) = {
        let (u, v) = (idx(&format!("b{gap}")), idx(&format!("b{}", gap + 1)));
        if ext.pos(u) < ext.pos(v) {
            (u, v)
        } else {
            (v, u)
        }
    };
    let (c_lo, c_hi) = if ext.pos(c1) < ext.pos(c2) {
        (c1, c2)
    } else {
        (c2, c1)
    };
    let inner_pair = [(b_lo, c_hi), (b_hi, c_lo)];

    let covers = match region(c1) {
        0 => vec![
            (first_two[0], alpha2),
            (first_two[1], alpha1),
            inner_pair[0],
            inner_pair[1],
        ],
        1 => vec![
            (first_two[0], alpha2),
            inner_pair[0],
            inner_pair[1],
            (last_two[0], alpha1),
        ],
        _ => vec![
            inner_pair[0],
            inner_pair[1],
            (last_two[0], alpha2),
            (last_two[1], alpha1),
        ],
    };
    let rainbow = Rainbow::new(covers);
    debug_assert!(rainbow.is_valid(&p, ext));
    Ok(rainbow)
}

/// The height tower: `q_height(2)` is the three-element poset `y≺x, y≺z`
/// with `x∥z`, its only marked V. Each step replaces every marked V — a
/// minimal element `y` with two marked incomparable tops — by a gadget that
/// deletes `y` and adds six elements forming two fresh marked Vs, wired so
/// the old tops stay reachable and the height grows by exactly one.
/// Returns the poset and the marked V triples `[x, y, z]` (middle element
/// minimal) left after the final step.
pub fn q_height(h: usize) -> Result<(Poset, Vec<[String; 3]>)> {
    if h < 2 {
        return Err(Error::InvalidParameter(format!(
            "q_height needs h >= 2, got {h}"
        )));
    }
    let mut labels: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
    let mut covers: Vec<(String, String)> =
        vec![("y".into(), "x".into()), ("y".into(), "z".into())];
    let mut vs: Vec<[String; 3]> = vec![["x".into(), "y".into(), "z".into()]];

    for _ in 2..h {
        let mut next_vs = Vec::with_capacity(2 * vs.len());
        for [a, m, b] in std::mem::take(&mut vs) {
            // Other up-cover targets of the vanishing minimum are inherited
            // by both replacement minima, preserving comparabilities with
            // the rest of the poset.
            let ext: Vec<String> = covers
                .iter()
                .filter(|(lo, hi)| *lo == m && *hi != a && *hi != b)
                .map(|(_, hi)| hi.clone())
                .collect();
            covers.retain(|(lo, _)| *lo != m);
            labels.retain(|l| *l != m);

            let m1 = format!("{m}1");
            let m2 = format!("{m}2");
            let tops1 = [format!("{m}1a"), format!("{m}1b")];
            let tops2 = [format!("{m}2a"), format!("{m}2b")];
            labels.extend([m1.clone(), m2.clone()]);
            labels.extend(tops1.iter().cloned());
            labels.extend(tops2.iter().cloned());

            covers.push((m1.clone(), tops1[0].clone()));
            covers.push((m1.clone(), tops1[1].clone()));
            covers.push((m1.clone(), a.clone()));
            covers.push((tops1[0].clone(), b.clone()));
            covers.push((tops1[1].clone(), b.clone()));
            covers.push((m2.clone(), tops2[0].clone()));
            covers.push((m2.clone(), tops2[1].clone()));
            covers.push((m2.clone(), b.clone()));
            covers.push((tops2[0].clone(), a.clone()));
            covers.push((tops2[1].clone(), a.clone()));
            for e in &ext {
                covers.push((m1.clone(), e.clone()));
                covers.push((m2.clone(), e.clone()));
            }
            next_vs.push([tops1[0].clone(), m1, tops1[1].clone()]);
            next_vs.push([tops2[0].clone(), m2, tops2[1].clone()]);
        }
        vs = next_vs;
    }
    let p = Poset::from_relations(labels, covers.clone())?;
    debug_assert_eq!(p.covers().len(), covers.len(), "gadget pairs stay covers");
    Ok((p, vs))
}

/// Orients a bipartite graph into a height-≤2 poset: `x < y` exactly for
/// edges with `x` in class A and `y` in class B. The classes must partition
/// the vertices and every edge must join the two classes.
pub fn poset_from_bipartite<S, E1, E2, A, B>(
    vertices: impl IntoIterator<Item = S>,
    edges: impl IntoIterator<Item = (E1, E2)>,
    class_a: impl IntoIterator<Item = A>,
    class_b: impl IntoIterator<Item = B>,
) -> Result<Poset>
where
    S: Into<String>,
    E1: AsRef<str>,
    E2: AsRef<str>,
    A: AsRef<str>,
    B: AsRef<str>,
{
    let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
    let mut side = std::collections::HashMap::<String, u8>::new();
    for l in &labels {
        if side.insert(l.clone(), 0).is_some() {
            return Err(Error::DuplicateElement(l.clone()));
        }
    }
    for a in class_a {
        let a = a.as_ref();
        match side.get_mut(a) {
            Some(s) if *s == 0 => *s = 1,
            Some(_) => {
                return Err(Error::NotBipartition(format!("{a} listed in both classes")))
            }
            None => return Err(Error::UnknownElement(a.to_owned())),
        }
    }
    for b in class_b {
        let b = b.as_ref();
        match side.get_mut(b) {
            Some(s) if *s == 0 => *s = 2,
            Some(_) => {
                return Err(Error::NotBipartition(format!("{b} listed in both classes")))
            }
            None => return Err(Error::UnknownElement(b.to_owned())),
        }
    }
    if let Some((l, _)) = side.iter().find(|(_, &s)| s == 0) {
        return Err(Error::NotBipartition(format!("{l} is in neither class")));
    }
    let mut relations = Vec::new();
    for (u, v) in edges {
        let (u, v) = (u.as_ref(), v.as_ref());
        let su = *side.get(u).ok_or_else(|| Error::UnknownElement(u.to_owned()))?;
        let sv = *side.get(v).ok_or_else(|| Error::UnknownElement(v.to_owned()))?;
        match (su, sv) {
            (1, 2) => relations.push((u.to_owned(), v.to_owned())),
            (2, 1) => relations.push((v.to_owned(), u.to_owned())),
            _ => {
                return Err(Error::NotBipartition(format!(
                    "edge {u}-{v} stays inside one class"
                )))
            }
        }
    }
    Poset::from_relations(labels, relations)
}

/// The two classical four-element patterns: `"2+2"` is two disjoint
/// 2-chains (`a<b, c<d`); `"N"` adds the cross relation `c<b`.
pub fn small_patterns(name: &str) -> Result<Poset> {
    let relations: &[(&str, &str)] = match name {
        "2+2" => &[("a", "b"), ("c", "d")],
        "N" => &[("a", "b"), ("c", "d"), ("c", "b")],
        _ => {
            return Err(Error::InvalidParameter(format!(
                "unknown pattern {name:?}: expected \"2+2\" or \"N\""
            )))
        }
    };
    Poset::from_relations(["a", "b", "c", "d"], relations.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_extension(p: &Poset, rng: &mut ChaCha8Rng) -> LinearExtension {
        let n = p.n();
        let mut indeg: Vec<usize> = (0..n).map(|v| p.down_covers(v).count()).collect();
        let mut avail: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while !avail.is_empty() {
            let k = rng.gen_range(0..avail.len());
            let v = avail.swap_remove(k);
            order.push(v);
            for u in p.up_covers(v) {
                indeg[u] -= 1;
                if indeg[u] == 0 {
                    avail.push(u);
                }
            }
        }
        LinearExtension::new(p, order).unwrap()
    }

    #[test]
    fn crown_shape() {
        let p = subdivided_crown(2).unwrap();
        assert_eq!(p.n(), 6);
        assert_eq!(p.covers().len(), 6);
        let pairs: Vec<(String, String)> = p
            .covers()
            .iter()
            .map(|&(u, v)| (p.label(u).to_owned(), p.label(v).to_owned()))
            .collect();
        for want in [
            ("a1", "b1"),
            ("a2", "b2"),
            ("b1", "c1"),
            ("b2", "c2"),
            ("a2", "c1"),
            ("a1", "c2"),
        ] {
            assert!(pairs.contains(&(want.0.into(), want.1.into())), "{want:?}");
        }
        assert!(matches!(
            subdivided_crown(1),
            Err(Error::InvalidParameter(_))
        ));
        for k in 2..=4 {
            let p = subdivided_crown(k).unwrap();
            assert_eq!(p.n(), 3 * k);
            assert_eq!(p.covers().len(), 3 * k);
            assert_eq!(p.width().unwrap().width, k);
        }
    }

    #[test]
    fn weak_order_shapes() {
        let chain = weak_order(&[1, 1, 1]).unwrap();
        assert_eq!(chain.n(), 3);
        assert_eq!(chain.covers().len(), 2);
        assert_eq!(chain.height().unwrap().height, 3);

        let k33 = weak_order(&[3, 3]).unwrap();
        assert_eq!(k33.covers().len(), 9);
        assert_eq!(k33.width().unwrap().width, 3);

        assert!(weak_order(&[]).is_err());
        assert!(weak_order(&[2, 0]).is_err());
    }

    #[test]
    fn width_tower_shape() {
        let sizes = [2usize, 7, 17, 37];
        for w in 1..=4usize {
            let (p, d) = q_width(w).unwrap();
            assert_eq!(p.n(), sizes[w - 1]);
            assert_eq!(p.width().unwrap().width, w);
            assert!(p.zero().is_some(), "single minimum");
            assert!(p.one().is_some(), "single maximum");
            assert_eq!(d.poset().n(), p.n());
            if w > 1 {
                assert_eq!(p.label(p.zero().unwrap()), "a");
                assert_eq!(p.label(p.one().unwrap()), "c");
            }
        }
        assert!(q_width(0).is_err());
    }

    #[test]
    fn counterexample_shape() {
        let (p, x, y) = height2_counterexample();
        assert_eq!(p.n(), 48);
        assert_eq!(p.covers().len(), 92);
        assert_eq!(p.height().unwrap().height, 2);
        assert_eq!(x.len(), 10);
        assert_eq!(y.len(), 38);
        for l in &x {
            let v = p.index_of(l).unwrap();
            assert_eq!(p.down_covers(v).count(), 0);
        }
    }

    #[test]
    fn witness_on_block_extension() {
        // All of X first, then the c's, then a1, a2: the chosen c-pair sits
        // below both a's and the first two b's carry the outer covers.
        let (p, _, _) = height2_counterexample();
        let mut order: Vec<usize> = Vec::new();
        for i in 1..=10 {
            order.push(p.index_of(&format!("b{i}")).unwrap());
        }
        for i in 1..=9 {
            for j in 1..=4 {
                order.push(p.index_of(&format!("c{i}_{j}")).unwrap());
            }
        }
        order.push(p.index_of("a1").unwrap());
        order.push(p.index_of("a2").unwrap());
        let ext = LinearExtension::new(&p, order).unwrap();
        let r = counterexample_witness(&ext).unwrap();
        assert_eq!(r.size(), 4);
        assert!(r.is_valid(&p, &ext));
        let labels = r.to_labels(&p);
        assert_eq!(labels[0], ("b1".to_owned(), "a2".to_owned()));
        assert_eq!(labels[1], ("b2".to_owned(), "a1".to_owned()));
    }

    #[test]
    fn witness_on_random_extensions() {
        let (p, _, _) = height2_counterexample();
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
        for _ in 0..200 {
            let ext = random_extension(&p, &mut rng);
            let r = counterexample_witness(&ext).unwrap();
            assert_eq!(r.size(), 4);
            assert!(r.is_valid(&p, &ext));
        }
    }

    #[test]
    fn witness_rejects_foreign_extension() {
        let (p, _, _) = height2_counterexample();
        let order: Vec<usize> = (0..p.n()).rev().collect();
        let ext = LinearExtension::permutation(p.n(), order).unwrap();
        assert!(matches!(
            counterexample_witness(&ext),
            Err(Error::NotALinearExtension { .. })
        ));
    }

    #[test]
    fn height_tower_shape() {
        let sizes = [3usize, 8, 18, 38];
        for h in 2..=5usize {
            let (p, vs) = q_height(h).unwrap();
            assert_eq!(p.n(), sizes[h - 2]);
            assert_eq!(vs.len(), 1 << (h - 2));
            assert_eq!(p.height().unwrap().height, h);
            for [a, m, b] in &vs {
                let (a, m, b) = (
                    p.index_of(a).unwrap(),
                    p.index_of(m).unwrap(),
                    p.index_of(b).unwrap(),
                );
                assert_eq!(p.down_covers(m).count(), 0, "middle is minimal");
                assert!(p.covers().contains(&(m, a)));
                assert!(p.covers().contains(&(m, b)));
                assert!(p.incomparable(a, b));
            }
            // Marked Vs are pairwise incomparable.
            for (i, v1) in vs.iter().enumerate() {
                for v2 in &vs[i + 1..] {
                    for l1 in v1 {
                        for l2 in v2 {
                            let (u, v) =
                                (p.index_of(l1).unwrap(), p.index_of(l2).unwrap());
                            assert!(p.incomparable(u, v), "{l1} vs {l2}");
                        }
                    }
                }
            }
        }
        assert_eq!(q_height(3).unwrap().0.covers().len(), 10);
        assert!(q_height(1).is_err());
    }

    #[test]
    fn bipartite_posets() {
        let claw = poset_from_bipartite(
            ["u", "v1", "v2", "v3"],
            [("u", "v1"), ("u", "v2"), ("u", "v3")],
            ["u"],
            ["v1", "v2", "v3"],
        )
        .unwrap();
        assert_eq!(claw.height().unwrap().height, 2);
        assert_eq!(claw.covers().len(), 3);

        let empty = poset_from_bipartite::<_, &str, &str, _, _>(
            ["u", "v"],
            [],
            ["u"],
            ["v"],
        )
        .unwrap();
        assert_eq!(empty.covers().len(), 0);
        assert_eq!(empty.width().unwrap().width, 2);

        let bad = poset_from_bipartite(
            ["u", "v", "w"],
            [("u", "v")],
            ["u", "v"],
            ["w"],
        );
        assert!(matches!(bad, Err(Error::NotBipartition(_))));

        let unsided = poset_from_bipartite(
            ["u", "v", "w"],
            [("u", "v")],
            ["u"],
            ["v"],
        );
        assert!(matches!(unsided, Err(Error::NotBipartition(_))));
    }

    #[test]
    fn bipartite_matches_counterexample() {
        let (want, x, y) = height2_counterexample();
        let mut vertices = x.clone();
        vertices.extend(y.iter().cloned());
        let mut edges = Vec::new();
        for i in 1..=10 {
            edges.push((format!("b{i}"), "a1".to_string()));
            edges.push((format!("b{i}"), "a2".to_string()));
        }
        for i in 1..=9 {
            for j in 1..=4 {
                edges.push((format!("c{i}_{j}"), format!("b{i}")));
                edges.push((format!("b{}", i + 1), format!("c{i}_{j}")));
            }
        }
        let got = poset_from_bipartite(vertices, edges, x, y).unwrap();
        assert!(got.same_order_as(&want));
        assert_eq!(got.covers().len(), want.covers().len());
    }

    #[test]
    fn named_patterns() {
        let two_two = small_patterns("2+2").unwrap();
        assert_eq!(two_two.covers().len(), 2);
        assert_eq!(two_two.width().unwrap().width, 2);
        let n = small_patterns("N").unwrap();
        assert_eq!(n.covers().len(), 3);
        assert_eq!(n.width().unwrap().width, 2);
        let b = n.index_of("b").unwrap();
        assert_eq!(n.down_covers(b).count(), 2);
        assert!(small_patterns("M").is_err());
    }
}
