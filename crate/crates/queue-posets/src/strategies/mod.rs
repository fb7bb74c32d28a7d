//! Constructive layout strategies. Each one builds a linear extension with a
//! provable ceiling on the queue count it can produce:
//!
//! * [`any_extension_layout`] — any extension needs at most width² queues;
//! * [`lazy_width2_layout`] — width ≤ 2 admits 2 queues via lazy extensions;
//! * [`paired_chain_layout`] — pairing chains saves 2⌊w/2⌋ off width²;
//! * [`crown_free_layout`] — width-many queues, or an embedded subdivided
//!   crown certifying why the method cannot apply;
//! * [`leftmost_layout`] — height−1 queues for two-dimensional posets with
//!   bounds, via a conjugate order;
//! * [`color_split_extension`] — turns a vertex order whose cover graph has
//!   small rainbows into an extension with rainbows at most 2(h−1) times
//!   larger;
//! * [`planar_width_layout`] — 3w−2 queues from an upward planar drawing.

mod any_order;
mod color_split;
mod crowns;
mod lazy;
mod leftmost;
mod paired;
mod planar;

pub use any_order::any_extension_layout;
pub use color_split::color_split_extension;
pub use crowns::{crown_free_layout, gray_graph, CrownEmbedding, CrownFreeResult, GrayGraph};
pub use lazy::lazy_width2_layout;
pub use leftmost::leftmost_layout;
pub use paired::paired_chain_layout;
pub use planar::planar_width_layout;

use crate::poset::Poset;

/// Rank of each element in label order; "smallest element" tie-breaks
/// throughout the strategies mean smallest label under this ranking.
pub(crate) fn label_ranks(p: &Poset) -> Vec<usize> {
    let mut by_label: Vec<usize> = (0..p.n()).collect();
    by_label.sort_by(|&a, &b| p.label(a).cmp(p.label(b)));
    let mut rank = vec![0; p.n()];
    for (r, &v) in by_label.iter().enumerate() {
        rank[v] = r;
    }
    rank
}

/// Topological order of an edge list over `0..n`, emitting the available
/// vertex of smallest `rank` first. Returns `None` on a cycle.
pub(crate) fn ranked_topo_order(
    n: usize,
    edges: impl Iterator<Item = (usize, usize)> + Clone,
    rank: &[usize],
) -> Option<Vec<usize>> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let mut indeg = vec![0usize; n];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, b) in edges {
        adj[a].push(b);
        indeg[b] += 1;
    }
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..n)
        .filter(|&v| indeg[v] == 0)
        .map(|v| Reverse((rank[v], v)))
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse((_, v))) = heap.pop() {
        order.push(v);
        for &u in &adj[v] {
            indeg[u] -= 1;
            if indeg[u] == 0 {
                heap.push(Reverse((rank[u], u)));
            }
        }
    }
    (order.len() == n).then_some(order)
}
