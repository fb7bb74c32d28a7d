use crate::error::Result;
use crate::layout::{assign_queues, QueueLayout};
use crate::poset::{LinearExtension, Poset};

use super::label_ranks;

/// Layout from a paired chain partition: the chains of a minimum partition
/// are grouped in twos (plus a leftover singleton when the width is odd),
/// and the extension interleaves the groups while keeping each group's own
/// subsequence lazy, which caps the queue count at w² − 2⌊w/2⌋.
///
/// The merge works online: at every step each group nominates, among its
/// elements that are minimal in the whole remaining poset, the one
/// continuing the chain it last emitted from (falling back to its smallest
/// available label), and the nomination of the smallest-indexed group wins.
/// Building each group's order up front and zipping afterwards can
/// deadlock — cross-group relations may force an emission order that no
/// fixed pair of sequences admits — so nomination happens against the live
/// remaining poset instead.
pub fn paired_chain_layout(p: &Poset) -> Result<QueueLayout> {
    let info = p.width()?;
    let chains = info.chains.chains;
    let n = p.n();
    let rank = label_ranks(p);
    let chain_of = {
        let mut of = vec![usize::MAX; n];
        for (c, chain) in chains.iter().enumerate() {
            for &x in chain {
                of[x] = c;
            }
        }
        of
    };
    // Chains 2g and 2g+1 form group g; a trailing unpaired chain is its own
    // group.
    let group_of: Vec<usize> = (0..n).map(|v| chain_of[v] / 2).collect();
    let group_count = chains.len().div_ceil(2);

    let mut indeg: Vec<usize> = (0..n).map(|v| p.down_covers(v).count()).collect();
    let mut avail: Vec<Vec<usize>> = vec![Vec::new(); group_count];
    for v in 0..n {
        if indeg[v] == 0 {
            avail[group_of[v]].push(v);
        }
    }
    let mut last_chain = vec![usize::MAX; group_count];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let g = (0..group_count)
            .find(|&g| !avail[g].is_empty())
            .expect("a nonempty poset has a minimal element");
        let slot = avail[g]
            .iter()
            .position(|&v| chain_of[v] == last_chain[g])
            .unwrap_or_else(|| {
                (0..avail[g].len())
                    .min_by_key(|&i| rank[avail[g][i]])
                    .unwrap()
            });
        let v = avail[g].swap_remove(slot);
        last_chain[g] = chain_of[v];
        order.push(v);
        for u in p.up_covers(v) {
            indeg[u] -= 1;
            if indeg[u] == 0 {
                avail[group_of[u]].push(u);
            }
        }
    }
    let ext = LinearExtension::new(p, order)?;
    assign_queues(p, &ext)
}
