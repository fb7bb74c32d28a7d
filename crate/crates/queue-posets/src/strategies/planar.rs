use std::f64::consts::FRAC_PI_2;

use crate::diagram::{point_on_segment, segments_intersect, PlaneSubdivision, UpwardDiagram};
use crate::error::{Error, Result};
use crate::layout::{verify_layout, QueueLayout};
use crate::poset::{LinearExtension, Poset};

use super::crowns::{crown_free_layout, CrownFreeResult};
use super::label_ranks;

/// Queue layout of a planar diagram with at most `3·width − 2` queues.
///
/// Extrema hidden inside bounded faces are tied to the rest of the order:
/// each internal minimum gains a relation from a vertex of the face beneath
/// it (symmetrically for maxima). The augmented poset is laid out
/// crown-free; covers that the new relations demote from cover status leave
/// their queue and move to an extra queue dedicated to the inserted edge
/// bordering them. Per component the outermost extrema already lie on the
/// unbounded face, so at most `2w − 2` relations are inserted.
///
/// The insertion target is chosen by a geometric filter (highest suitable
/// boundary extremum whose segment stays crossing-free) rather than a
/// proven rule; `AugmentationFailed` reports the cases where no choice
/// works out, which the final verification re-checks end to end.
pub fn planar_width_layout(d: &UpwardDiagram) -> Result<QueueLayout> {
    let p = d.poset();
    let pts = d.positions();
    let n = p.n();
    let rank = label_ranks(p);
    let sub = d.subdivision()?;

    let internal = |v: &usize| !sub.on_outer_face(*v);
    let internal_min: Vec<usize> = p.minimal_elements().into_iter().filter(internal).collect();
    let internal_max: Vec<usize> = p.maximal_elements().into_iter().filter(internal).collect();
    #[cfg(debug_assertions)]
    if n > 0 {
        let w = p.width()?.width;
        debug_assert!(internal_min.len() + internal_max.len() + 2 <= 2 * w || w == 0);
    }

    let mut seg_edges: Vec<(usize, usize)> = p.covers().to_vec();
    let mut inserted: Vec<(usize, usize)> = Vec::new();
    // The candidate segment must not run through a vertex or cross what is
    // already drawn (covers plus earlier insertions).
    let insertion_ok = |segs: &[(usize, usize)], a: usize, b: usize| -> bool {
        (0..n).all(|v| v == a || v == b || !point_on_segment(pts[v], pts[a], pts[b]))
            && segs.iter().all(|&(c, e)| {
                a == c
                    || a == e
                    || b == c
                    || b == e
                    || !segments_intersect(pts[a], pts[b], pts[c], pts[e])
            })
    };

    for (&x, lower) in internal_min
        .iter()
        .map(|x| (x, true))
        .chain(internal_max.iter().map(|x| (x, false)))
    {
        let dir = if lower { -FRAC_PI_2 } else { FRAC_PI_2 };
        let face = sub.face_at_direction(pts, x, dir);
        let mut cand = sub.boundary_extremes(pts, face, lower);
        // Strictly past x vertically, nearest first, smallest label on ties.
        cand.retain(|&y| if lower { pts[y].1 < pts[x].1 } else { pts[y].1 > pts[x].1 });
        cand.sort_by(|&u, &v| {
            let key = |y: usize| if lower { -pts[y].1 } else { pts[y].1 };
            key(u).partial_cmp(&key(v)).unwrap().then(rank[u].cmp(&rank[v]))
        });
        let Some(y) = cand.into_iter().find(|&y| insertion_ok(&seg_edges, y, x)) else {
            return Err(Error::AugmentationFailed(format!(
                "no crossing-free relation reaches the internal {} {}",
                if lower { "minimum" } else { "maximum" },
                p.label(x)
            )));
        };
        let rel = if lower { (y, x) } else { (x, y) };
        inserted.push(rel);
        seg_edges.push(rel);
    }

    let q = Poset::from_indexed(p.labels().to_vec(), &seg_edges)?;
    let crown = match crown_free_layout(&q)? {
        CrownFreeResult::Layout(l) => l,
        CrownFreeResult::Embedded(e) => {
            return Err(Error::AugmentationFailed(format!(
                "augmented order embeds a {}-crown",
                e.k
            )))
        }
    };

    // Covers of p keep their queue while they stay covers of q; the rest
    // ("demoted" by a new chain through an inserted relation) each join the
    // queue of an inserted edge bordering them in the augmented drawing.
    let q_index: std::collections::HashMap<(usize, usize), usize> = q
        .covers()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let aug = PlaneSubdivision::build(pts, &seg_edges)?;
    let m0 = p.covers().len();
    let mut queue_of = vec![0usize; m0];
    for (i, &(u, v)) in p.covers().iter().enumerate() {
        if let Some(&qi) = q_index.get(&(u, v)) {
            queue_of[i] = crown.queue_of[qi];
            continue;
        }
        let extra = [2 * i, 2 * i + 1]
            .into_iter()
            .flat_map(|dart| aug.faces[aug.face_of_dart[dart]].darts.iter())
            .map(|&dd| dd / 2)
            .filter(|&e| e >= m0)
            .filter(|&e| {
                let (a, b) = seg_edges[e];
                a == u || a == v || b == u || b == v
            })
            .min();
        let Some(e) = extra else {
            return Err(Error::AugmentationFailed(format!(
                "demoted cover {}-{} borders no inserted edge",
                p.label(u),
                p.label(v)
            )));
        };
        queue_of[i] = crown.queue_count + (e - m0);
    }

    #[cfg(debug_assertions)]
    for j in 0..inserted.len() {
        // An extra queue holds at most two covers and they share an endpoint.
        let members: Vec<(usize, usize)> = p
            .covers()
            .iter()
            .copied()
            .zip(queue_of.iter().copied())
            .filter(|&(_, qq)| qq == crown.queue_count + j)
            .map(|(c, _)| c)
            .collect();
        debug_assert!(members.len() <= 2);
        if let [(a, b), (c, e)] = members[..] {
            debug_assert!(a == c || a == e || b == c || b == e);
        }
    }

    let layout = QueueLayout {
        extension: LinearExtension::new(p, crown.extension.order().to_vec())?,
        queue_of,
        queue_count: crown.queue_count + inserted.len(),
    };
    if let Err(report) = verify_layout(p, &layout) {
        return Err(Error::AugmentationFailed(format!(
            "augmentation produced an invalid layout: {report}"
        )));
    }
    Ok(layout)
}
