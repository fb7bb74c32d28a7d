use crate::error::Result;
use crate::layout::{assign_queues, QueueLayout};
use crate::poset::{LinearExtension, Poset};

use super::{label_ranks, ranked_topo_order};

/// Lays out `p` along the deterministic topological order of its covers
/// that always emits the available element with the smallest label. Any
/// extension whatsoever keeps the queue count at or below width².
pub fn any_extension_layout(p: &Poset) -> Result<QueueLayout> {
    let rank = label_ranks(p);
    let order = ranked_topo_order(p.n(), p.covers().iter().copied(), &rank)
        .expect("covers of a poset are acyclic");
    let ext = LinearExtension::new(p, order)?;
    assign_queues(p, &ext)
}
