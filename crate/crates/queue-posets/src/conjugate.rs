//! Conjugate orders: a partial order on the same elements in which two
//! distinct elements are comparable exactly when the original pair is
//! incomparable. A conjugate exists iff the poset has dimension at most two.
//!
//! Two routes are provided. Without coordinates, the incomparability graph
//! is transitively oriented by forcing classes. With an upward drawing, the
//! geometric left-of order is used instead: `x` is below `y` in the
//! conjugate when `x` lies strictly left of the leftmost maximal chain
//! through `y`. The result records which route produced it, since the two
//! can disagree (both are valid conjugates).

use crate::diagram::UpwardDiagram;
use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugateMethod {
    ForcingClasses,
    Geometric,
}

#[derive(Debug, Clone)]
pub struct ConjugateResult {
    pub poset: Poset,
    pub method: ConjugateMethod,
}

/// Computes a conjugate order of `p`, geometrically when a drawing is
/// supplied and combinatorially otherwise. Fails with `NotTwoDimensional`
/// when the incomparability graph has no transitive orientation, and with
/// `InvalidDiagram` when the drawing belongs to a different poset or its
/// left-of relation is not a conjugate order.
pub fn conjugate(p: &Poset, diagram: Option<&UpwardDiagram>) -> Result<ConjugateResult> {
    match diagram {
        Some(d) => {
            if !d.poset().same_order_as(p) {
                return Err(Error::InvalidDiagram(
                    "drawing does not match the poset".into(),
                ));
            }
            let oriented = left_of_orientation(p, d);
            let poset = finish(p, oriented, |what| {
                Error::InvalidDiagram(format!("left-of relation is not a conjugate: {what}"))
            })?;
            Ok(ConjugateResult {
                poset,
                method: ConjugateMethod::Geometric,
            })
        }
        None => {
            let oriented = force_orientation(p)?;
            let poset = finish(p, oriented, |what| {
                let _ = what;
                Error::NotTwoDimensional
            })?;
            Ok(ConjugateResult {
                poset,
                method: ConjugateMethod::ForcingClasses,
            })
        }
    }
}

/// Closes the chosen orientation and verifies the conjugacy condition:
/// distinct elements comparable in exactly one of the two orders.
fn finish(
    p: &Poset,
    oriented: Vec<(usize, usize)>,
    err: impl Fn(&str) -> Error,
) -> Result<Poset> {
    let star = Poset::from_indexed(p.labels().to_vec(), &oriented)
        .map_err(|_| err("orientation is cyclic"))?;
    for i in 0..p.n() {
        for j in i + 1..p.n() {
            if p.comparable(i, j) == star.comparable(i, j) {
                return Err(err("comparability is not complemented"));
            }
        }
    }
    Ok(star)
}

/// Transitive orientation by forcing classes: repeatedly orient the least
/// unoriented incomparable pair from its smaller to its larger label, spread
/// the forced orientations (edges sharing an endpoint whose far ends are
/// nonadjacent must point the same way), then remove the finished class and
/// continue on the rest.
fn force_orientation(p: &Poset) -> Result<Vec<(usize, usize)>> {
    let n = p.n();
    let mut rank_order: Vec<usize> = (0..n).collect();
    rank_order.sort_by(|&a, &b| p.label(a).cmp(p.label(b)));

    let mut inc = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j && p.incomparable(i, j) {
                inc[i * n + j] = true;
            }
        }
    }
    let mut oriented: Vec<(usize, usize)> = Vec::new();
    loop {
        let mut seed = None;
        'scan: for &u in &rank_order {
            for &v in &rank_order {
                if inc[u * n + v] {
                    seed = Some((u, v));
                    break 'scan;
                }
            }
        }
        let Some(seed) = seed else { break };

        // 0 undecided, 1 points low->high index, 2 points high->low.
        let mut dir = vec![0u8; n * n];
        let key = |a: usize, b: usize| if a < b { (a * n + b, 1u8) } else { (b * n + a, 2u8) };
        let mut queue = vec![seed];
        let (k, d) = key(seed.0, seed.1);
        dir[k] = d;
        let mut class = vec![seed];
        while let Some((a, b)) = queue.pop() {
            for c in 0..n {
                // Same tail: a->b forces a->c when b and c are nonadjacent.
                if c != b && inc[a * n + c] && !inc[b * n + c] {
                    let (k, d) = key(a, c);
                    if dir[k] == 0 {
                        dir[k] = d;
                        class.push((a, c));
                        queue.push((a, c));
                    } else if dir[k] != d {
                        return Err(Error::NotTwoDimensional);
                    }
                }
                // Same head: a->b forces c->b when a and c are nonadjacent.
                if c != a && inc[c * n + b] && !inc[a * n + c] {
                    let (k, d) = key(c, b);
                    if dir[k] == 0 {
                        dir[k] = d;
                        class.push((c, b));
                        queue.push((c, b));
                    } else if dir[k] != d {
                        return Err(Error::NotTwoDimensional);
                    }
                }
            }
        }
        for &(a, b) in &class {
            inc[a * n + b] = false;
            inc[b * n + a] = false;
        }
        oriented.extend(class);
    }
    Ok(oriented)
}

/// Orients every incomparable pair by the drawing: the lower-indexed element
/// goes below iff it lies strictly left of the leftmost maximal chain
/// through the other.
fn left_of_orientation(p: &Poset, d: &UpwardDiagram) -> Vec<(usize, usize)> {
    let mut oriented = Vec::new();
    for u in 0..p.n() {
        for v in u + 1..p.n() {
            if p.incomparable(u, v) {
                let chain = leftmost_chain(p, d, v);
                if strictly_left(d, u, &chain) {
                    oriented.push((u, v));
                } else {
                    oriented.push((v, u));
                }
            }
        }
    }
    oriented
}

/// The maximal chain through `v` that always takes the leftmost cover:
/// going up, the up-cover of largest direction angle; going down, the
/// down-cover of smallest. Returned bottom-up.
fn leftmost_chain(p: &Poset, d: &UpwardDiagram, v: usize) -> Vec<usize> {
    let angle = |from: usize, to: usize| {
        let (fx, fy) = d.position(from);
        let (tx, ty) = d.position(to);
        (ty - fy).atan2(tx - fx)
    };
    let mut chain = vec![v];
    let mut cur = v;
    loop {
        let up = p
            .up_covers(cur)
            .max_by(|&a, &b| angle(cur, a).partial_cmp(&angle(cur, b)).unwrap());
        match up {
            Some(u) => {
                chain.push(u);
                cur = u;
            }
            None => break,
        }
    }
    cur = v;
    loop {
        let down = p
            .down_covers(cur)
            .min_by(|&a, &b| angle(cur, a).partial_cmp(&angle(cur, b)).unwrap());
        match down {
            Some(u) => {
                chain.insert(0, u);
                cur = u;
            }
            None => break,
        }
    }
    chain
}

fn strictly_left(d: &UpwardDiagram, x: usize, chain: &[usize]) -> bool {
    let (px, py) = d.position(x);
    let pts: Vec<(f64, f64)> = chain.iter().map(|&c| d.position(c)).collect();
    // Below or above the polyline's span: compare against the end vertex.
    if py <= pts[0].1 {
        return px < pts[0].0;
    }
    if py >= pts[pts.len() - 1].1 {
        let top = pts[pts.len() - 1];
        return px < top.0;
    }
    for w in pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        if py == b.1 {
            return px < b.0;
        }
        if py > a.1 && py < b.1 {
            return crate::diagram::cross(a, b, (px, py)) > 0.0;
        }
    }
    false
}
