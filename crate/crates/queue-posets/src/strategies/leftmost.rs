use crate::conjugate::conjugate;
use crate::diagram::UpwardDiagram;
use crate::error::{Error, Result};
use crate::layout::{assign_queues, QueueLayout};
use crate::poset::{LinearExtension, Poset};

/// Layout from the leftmost linear extension of a two-dimensional bounded
/// poset: incomparable pairs inherit their order from a conjugate, so the
/// union of poset and conjugate is already a total order and the extension
/// just reads it off. With a geometric conjugate (diagram supplied) the
/// queue count stays below the poset's height.
pub fn leftmost_layout(p: &Poset, diagram: Option<&UpwardDiagram>) -> Result<QueueLayout> {
    if p.zero().is_none() {
        return Err(Error::MissingBounds("0"));
    }
    if p.one().is_none() {
        return Err(Error::MissingBounds("1"));
    }
    let star = conjugate(p, diagram)?.poset;
    let n = p.n();
    // In the union order every element has a distinct number of
    // predecessors, so sorting by that count linearizes it.
    let preds: Vec<usize> = (0..n)
        .map(|v| (0..n).filter(|&u| p.lt(u, v) || star.lt(u, v)).count())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&v| preds[v]);
    debug_assert!((0..n).all(|i| preds[order[i]] == i), "union must be total");
    let ext = LinearExtension::new(p, order)?;
    assign_queues(p, &ext)
}
