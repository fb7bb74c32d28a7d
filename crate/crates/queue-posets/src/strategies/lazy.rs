use crate::error::{Error, Result};
use crate::layout::{assign_queues, QueueLayout};
use crate::poset::{ChainPartition, LinearExtension, Poset};

use super::label_ranks;

/// Two-queue layout for posets of width at most 2.
///
/// A global minimum is added when missing, a partition into two chains is
/// fixed, and the extension is built greedily: always emit a currently
/// minimal element, staying on the chain of the element just emitted
/// whenever that chain has one available. That greediness makes the
/// extension lazy — each block of consecutive same-chain elements is
/// related to the block before it — which caps every rainbow at 2. The
/// added minimum is stripped before queues are assigned.
pub fn lazy_width2_layout(p: &Poset) -> Result<QueueLayout> {
    let width = p.width()?.width;
    if width > 2 {
        return Err(Error::WidthExceeded { width, max: 2 });
    }
    let added_zero = p.zero().is_none();
    let bounded;
    let p0 = if added_zero {
        bounded = p.with_bounds(true, false);
        &bounded
    } else {
        p
    };
    let chains = p0.width()?.chains;
    let mut order = lazy_extension(p0, &chains);
    if added_zero {
        // The fresh minimum is the only minimal element, hence first.
        debug_assert_eq!(order[0], p.n());
        order.remove(0);
    }
    let ext = LinearExtension::new(p, order)?;
    assign_queues(p, &ext)
}

/// The greedy chain-preferring extension order. `chains` must partition the
/// elements of `p0`.
pub(crate) fn lazy_extension(p0: &Poset, chains: &ChainPartition) -> Vec<usize> {
    let n = p0.n();
    let chain_of = chains.chain_of(n);
    let rank = label_ranks(p0);
    let mut indeg: Vec<usize> = (0..n).map(|v| p0.down_covers(v).count()).collect();
    let mut avail: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    let mut prev_chain = usize::MAX;
    while !avail.is_empty() {
        let same = avail.iter().position(|&v| chain_of[v] == prev_chain);
        let at = same.unwrap_or_else(|| {
            (0..avail.len()).min_by_key(|&i| rank[avail[i]]).unwrap()
        });
        let v = avail.swap_remove(at);
        prev_chain = chain_of[v];
        order.push(v);
        for u in p0.up_covers(v) {
            indeg[u] -= 1;
            if indeg[u] == 0 {
                avail.push(u);
            }
        }
    }
    debug_assert_eq!(order.len(), n);
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::verify_layout;

    #[test]
    fn two_chain() {
        let p = Poset::from_relations(["a", "b"], [("a", "b")]).unwrap();
        let l = lazy_width2_layout(&p).unwrap();
        assert_eq!(l.queue_count, 1);
    }

    #[test]
    fn rejects_width_three() {
        let p = Poset::from_relations::<_, &str, &str>(["a", "b", "c"], []).unwrap();
        assert!(matches!(
            lazy_width2_layout(&p),
            Err(Error::WidthExceeded { width: 3, max: 2 })
        ));
    }

    #[test]
    fn interleaved_chains_two_queues() {
        // Two chains with zig-zag cross relations.
        let p = Poset::from_relations(
            ["a1", "a2", "a3", "b1", "b2", "b3"],
            [
                ("a1", "a2"),
                ("a2", "a3"),
                ("b1", "b2"),
                ("b2", "b3"),
                ("a1", "b2"),
                ("b1", "a3"),
            ],
        )
        .unwrap();
        let l = lazy_width2_layout(&p).unwrap();
        assert!(l.queue_count <= 2);
        assert!(verify_layout(&p, &l).is_ok());
    }

    #[test]
    fn blocks_are_lazy() {
        let p = Poset::from_relations(
            ["a1", "a2", "b1", "b2", "b3"],
            [("a1", "a2"), ("b1", "b2"), ("b2", "b3"), ("b1", "a2")],
        )
        .unwrap();
        let l = lazy_width2_layout(&p).unwrap();
        // Reconstruct the bounded poset's extension: the stripped minimum
        // went first.
        let p0 = p.with_bounds(true, false);
        let chains = p0.width().unwrap().chains;
        let chain_of = chains.chain_of(p0.n());
        let mut order0 = vec![p.n()];
        order0.extend(l.extension.order());
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &v in &order0 {
            match blocks.last_mut() {
                Some(b) if chain_of[*b.last().unwrap()] == chain_of[v] => b.push(v),
                _ => blocks.push(vec![v]),
            }
        }
        for w in blocks.windows(2) {
            for &e in &w[1] {
                assert!(
                    w[0].iter().any(|&f| p0.comparable(e, f)),
                    "block element unrelated to previous block"
                );
            }
        }
    }
}
