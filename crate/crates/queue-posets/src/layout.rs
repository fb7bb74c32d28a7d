//! Rainbows, queue assignment, and layout verification.
//!
//! Covers are viewed as intervals between endpoint positions in a linear
//! extension. Two covers *nest* when one interval strictly contains the
//! other — strictly on both sides, so covers sharing an endpoint never nest.
//! A *rainbow* is a set of pairwise nested covers; a queue assignment is
//! valid when no queue holds a nested pair. By the duality between rainbows
//! and queue partitions, the largest rainbow equals the fewest queues
//! sufficient for the given extension.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::{LinearExtension, Poset};

/// Sentinel queue index for covers an external layout left unassigned.
pub const UNASSIGNED: usize = usize::MAX;

/// A set of pairwise nested covers, stored outermost first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rainbow {
    covers: Vec<(usize, usize)>,
}

impl Rainbow {
    pub(crate) fn new(covers: Vec<(usize, usize)>) -> Rainbow {
        Rainbow { covers }
    }

    pub fn size(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    /// Covers outermost first: each strictly contains all later ones.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn to_labels(&self, p: &Poset) -> Vec<(String, String)> {
        self.covers
            .iter()
            .map(|&(a, b)| (p.label(a).to_owned(), p.label(b).to_owned()))
            .collect()
    }

    /// True when every pair is a cover of `p` and consecutive pairs strictly
    /// nest under `order` (which implies pairwise nesting by transitivity).
    pub fn is_valid(&self, p: &Poset, order: &LinearExtension) -> bool {
        if !self.covers.iter().all(|c| p.covers().contains(c)) {
            return false;
        }
        self.covers.windows(2).all(|w| {
            let (oa, ob) = w[0];
            let (ia, ib) = w[1];
            order.pos(oa) < order.pos(ia) && order.pos(ib) < order.pos(ob)
        })
    }
}

/// A queue layout: a linear extension plus a queue index per cover
/// (`queue_of` is parallel to `Poset::covers()`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueueLayout {
    pub extension: LinearExtension,
    pub queue_of: Vec<usize>,
    pub queue_count: usize,
}

/// Largest rainbow over the covers of `p` under `ext`, with one witness.
///
/// Each cover maps to the interval of its endpoint positions; the answer is
/// the longest chain in the strict-containment order of those intervals.
pub fn max_rainbow(p: &Poset, ext: &LinearExtension) -> Result<(usize, Rainbow)> {
    ensure_extension(p, ext)?;
    let intervals = cover_intervals(p, ext);
    let (depth, chain) = longest_containment_chain(&intervals);
    let k = depth.iter().copied().max().unwrap_or(0);
    let covers = chain.iter().map(|&i| p.covers()[i]).collect();
    Ok((k, Rainbow::new(covers)))
}

/// Largest rainbow of the cover *graph* under an arbitrary vertex order:
/// endpoint positions are normalized so each cover spans left-to-right.
/// Unlike [`max_rainbow`], `order` need not extend the poset.
pub fn cover_graph_rainbow(p: &Poset, order: &LinearExtension) -> (usize, Rainbow) {
    assert_eq!(order.len(), p.n(), "order must cover all elements");
    let intervals: Vec<(usize, usize)> = p
        .covers()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (order.pos(a), order.pos(b));
            (x.min(y), x.max(y))
        })
        .collect();
    let (depth, chain) = longest_containment_chain(&intervals);
    let k = depth.iter().copied().max().unwrap_or(0);
    let covers = chain.iter().map(|&i| p.covers()[i]).collect();
    (k, Rainbow::new(covers))
}

/// Assigns each cover to queue (nesting depth − 1), where the depth of a
/// cover is the longest containment chain of covers descending to it. Covers
/// of equal depth never nest, so the assignment is valid and uses exactly
/// `max_rainbow` queues — the fewest possible for this extension.
pub fn assign_queues(p: &Poset, ext: &LinearExtension) -> Result<QueueLayout> {
    ensure_extension(p, ext)?;
    let intervals = cover_intervals(p, ext);
    let (depth, _) = longest_containment_chain(&intervals);
    let queue_count = depth.iter().copied().max().unwrap_or(0);
    let queue_of = depth.iter().map(|&d| d - 1).collect();
    Ok(QueueLayout {
        extension: ext.clone(),
        queue_of,
        queue_count,
    })
}

/// One reason a layout fails verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OrderNotPermutation {
        reason: String,
    },
    NotALinearExtension {
        smaller: String,
        larger: String,
    },
    CoverCountMismatch {
        got: usize,
        want: usize,
    },
    UnassignedCover {
        cover: (String, String),
    },
    QueueIndexOutOfRange {
        cover: (String, String),
        queue: usize,
        queue_count: usize,
    },
    NestedInSameQueue {
        outer: (String, String),
        inner: (String, String),
        queue: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OrderNotPermutation { reason } => {
                write!(f, "order is not a permutation of the elements: {reason}")
            }
            Violation::NotALinearExtension { smaller, larger } => {
                write!(
                    f,
                    "not a linear extension: {smaller} < {larger} but {larger} comes first"
                )
            }
            Violation::CoverCountMismatch { got, want } => {
                write!(f, "queue vector has {got} entries for {want} covers")
            }
            Violation::UnassignedCover { cover } => {
                write!(f, "cover {}<{} has no queue", cover.0, cover.1)
            }
            Violation::QueueIndexOutOfRange {
                cover,
                queue,
                queue_count,
            } => write!(
                f,
                "cover {}<{} uses queue {queue} but only {queue_count} queues are declared",
                cover.0, cover.1
            ),
            Violation::NestedInSameQueue {
                outer,
                inner,
                queue,
            } => write!(
                f,
                "queue {queue} holds nested covers: {}<{} inside {}<{}",
                inner.0, inner.1, outer.0, outer.1
            ),
        }
    }
}

/// All verification failures of a layout against a poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Independent validity check: the order must be a linear extension, every
/// cover must carry an in-range queue index, and no queue may hold a nested
/// pair. Mismatches are reported as data, not errors.
pub fn verify_layout(p: &Poset, layout: &QueueLayout) -> std::result::Result<(), ViolationReport> {
    let mut violations = Vec::new();
    let ext = &layout.extension;
    if ext.len() != p.n() {
        violations.push(Violation::OrderNotPermutation {
            reason: format!("{} entries for {} elements", ext.len(), p.n()),
        });
        return Err(ViolationReport { violations });
    }
    for &(a, b) in p.covers() {
        if ext.pos(a) > ext.pos(b) {
            violations.push(Violation::NotALinearExtension {
                smaller: p.label(a).to_owned(),
                larger: p.label(b).to_owned(),
            });
        }
    }
    let m = p.covers().len();
    if layout.queue_of.len() != m {
        violations.push(Violation::CoverCountMismatch {
            got: layout.queue_of.len(),
            want: m,
        });
        return Err(ViolationReport { violations });
    }
    let label_pair = |c: (usize, usize)| (p.label(c.0).to_owned(), p.label(c.1).to_owned());
    for (i, &q) in layout.queue_of.iter().enumerate() {
        if q == UNASSIGNED {
            violations.push(Violation::UnassignedCover {
                cover: label_pair(p.covers()[i]),
            });
        } else if q >= layout.queue_count {
            violations.push(Violation::QueueIndexOutOfRange {
                cover: label_pair(p.covers()[i]),
                queue: q,
                queue_count: layout.queue_count,
            });
        }
    }
    if violations.is_empty() {
        let intervals = cover_intervals(p, ext);
        for i in 0..m {
            for j in 0..m {
                if layout.queue_of[i] == layout.queue_of[j] && strictly_contains(intervals[i], intervals[j]) {
                    violations.push(Violation::NestedInSameQueue {
                        outer: label_pair(p.covers()[i]),
                        inner: label_pair(p.covers()[j]),
                        queue: layout.queue_of[i],
                    });
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(ViolationReport { violations })
    }
}

fn ensure_extension(p: &Poset, ext: &LinearExtension) -> Result<()> {
    if ext.len() != p.n() {
        return Err(Error::NotALinearExtension {
            reason: format!("order has {} entries, poset has {}", ext.len(), p.n()),
        });
    }
    for &(a, b) in p.covers() {
        if ext.pos(a) > ext.pos(b) {
            return Err(Error::NotALinearExtension {
                reason: format!(
                    "{} < {} but {} is placed later",
                    p.label(a),
                    p.label(b),
                    p.label(a)
                ),
            });
        }
    }
    Ok(())
}

fn cover_intervals(p: &Poset, ext: &LinearExtension) -> Vec<(usize, usize)> {
    p.covers()
        .iter()
        .map(|&(a, b)| (ext.pos(a), ext.pos(b)))
        .collect()
}

fn strictly_contains(outer: (usize, usize), inner: (usize, usize)) -> bool {
    outer.0 < inner.0 && inner.1 < outer.1
}

/// Nesting depth of every interval (longest strict-containment chain ending
/// at it, counting itself) plus one deepest chain, outermost first.
///
/// Processing order is left endpoint ascending, right descending, so every
/// potential container of an interval precedes it; ties break toward the
/// earliest candidate for determinism.
fn longest_containment_chain(intervals: &[(usize, usize)]) -> (Vec<usize>, Vec<usize>) {
    let m = intervals.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (intervals[i].0, std::cmp::Reverse(intervals[i].1)));
    let mut depth = vec![1usize; m];
    let mut parent = vec![usize::MAX; m];
    for (oi, &i) in order.iter().enumerate() {
        for &j in &order[..oi] {
            if strictly_contains(intervals[j], intervals[i]) && depth[j] + 1 > depth[i] {
                depth[i] = depth[j] + 1;
                parent[i] = j;
            }
        }
    }
    let k = depth.iter().copied().max().unwrap_or(0);
    let mut chain = Vec::new();
    if m > 0 {
        let innermost = order
            .iter()
            .copied()
            .find(|&i| depth[i] == k)
            .expect("max depth is reached");
        let mut cur = innermost;
        chain.push(cur);
        while parent[cur] != usize::MAX {
            cur = parent[cur];
            chain.push(cur);
        }
        chain.reverse();
    }
    (depth, chain)
}
