use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A finite strict partial order over interned string labels.
///
/// Internally elements are dense indices `0..n` in input order; the strict
/// order is stored as a closed `n x n` boolean matrix together with its
/// transitive reduction (the cover relation). All instances are small
/// ("desk scale"), so the quadratic storage is deliberate.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    n: usize,
    /// Row-major strict order matrix: `lt[a * n + b]` iff `a < b`.
    lt: Vec<bool>,
    /// Transitive reduction, lexicographically sorted by `(a, b)`.
    covers: Vec<(usize, usize)>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

impl Poset {
    /// Builds a poset from element labels and generating relation pairs
    /// `(smaller, larger)`. The relation is transitively closed; a cyclic
    /// input is rejected with one witness cycle.
    pub fn from_relations<S, T, U>(
        elements: impl IntoIterator<Item = S>,
        relations: impl IntoIterator<Item = (T, U)>,
    ) -> Result<Poset>
    where
        S: Into<String>,
        T: AsRef<str>,
        U: AsRef<str>,
    {
        let labels: Vec<String> = elements.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateElement(l.clone()));
            }
        }
        let mut pairs = Vec::new();
        for (a, b) in relations {
            let a = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownElement(a.as_ref().to_owned()))?;
            let b = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownElement(b.as_ref().to_owned()))?;
            pairs.push((a, b));
        }
        Self::from_indexed(labels, &pairs)
    }

    /// Index-level constructor used by generators; `pairs` are `(smaller, larger)`.
    pub fn from_indexed(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateElement(l.clone()));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in pairs {
            assert!(a < n && b < n, "relation index out of range");
            adj[a].push(b);
        }
        if let Some(cycle) = find_cycle(&adj) {
            let cycle = cycle.into_iter().map(|i| labels[i].clone()).collect();
            return Err(Error::Cycle { cycle });
        }
        let mut lt = vec![false; n * n];
        // The generating digraph is acyclic; close it by a reverse-topological sweep.
        let topo = toposort(&adj);
        for &v in topo.iter().rev() {
            for &w in &adj[v] {
                lt[v * n + w] = true;
                for t in 0..n {
                    if lt[w * n + t] {
                        lt[v * n + t] = true;
                    }
                }
            }
        }
        let covers = reduction(n, &lt);
        Ok(Poset {
            labels,
            index,
            n,
            lt,
            covers,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Strict order test `a < b`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a * self.n + b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) || self.lt(b, a)
    }

    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        a != b && !self.comparable(a, b)
    }

    /// Cover pairs `(a, b)` with `a ≺ b`, sorted by `(a, b)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn up_covers(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers
            .iter()
            .filter(move |&&(x, _)| x == a)
            .map(|&(_, y)| y)
    }

    pub fn down_covers(&self, b: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers
            .iter()
            .filter(move |&&(_, y)| y == b)
            .map(|&(x, _)| x)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&b| (0..self.n).all(|a| !self.lt(a, b)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| (0..self.n).all(|b| !self.lt(a, b)))
            .collect()
    }

    /// The global minimum, if the poset has exactly one element below all others.
    pub fn zero(&self) -> Option<usize> {
        let mins = self.minimal_elements();
        match mins.as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    /// The global maximum, if unique.
    pub fn one(&self) -> Option<usize> {
        let maxs = self.maximal_elements();
        match maxs.as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    /// Adds a fresh global minimum and/or maximum where requested and missing.
    /// Fresh labels are `"0"` / `"1"`, prefixed with underscores until unused.
    pub fn with_bounds(&self, add_zero: bool, add_one: bool) -> Poset {
        let need_zero = add_zero && self.zero().is_none();
        let need_one = add_one && self.one().is_none();
        if !need_zero && !need_one {
            return self.clone();
        }
        let mut labels = self.labels.clone();
        let mut pairs: Vec<(usize, usize)> = self.covers.clone();
        if need_zero {
            let z = labels.len();
            labels.push(self.fresh_label("0"));
            for m in self.minimal_elements() {
                pairs.push((z, m));
            }
            if self.n == 0 && !need_one {
                // nothing else to attach
            }
        }
        if need_one {
            let o = labels.len();
            labels.push(self.fresh_label("1"));
            for m in self.maximal_elements() {
                pairs.push((m, o));
            }
            if need_zero && self.n == 0 {
                pairs.push((self.n, o));
            }
        }
        Poset::from_indexed(labels, &pairs).expect("bounded extension of a poset is a poset")
    }

    fn fresh_label(&self, base: &str) -> String {
        let mut candidate = base.to_string();
        while self.index.contains_key(&candidate) {
            candidate.insert(0, '_');
        }
        candidate
    }

    /// Induced subposet on `subset` (indices into `self`, in the given order).
    /// Returns the subposet and the map from new indices to old ones.
    pub fn restrict(&self, subset: &[usize]) -> (Poset, Vec<usize>) {
        let labels: Vec<String> = subset.iter().map(|&i| self.labels[i].clone()).collect();
        let mut pairs = Vec::new();
        for (i, &a) in subset.iter().enumerate() {
            for (j, &b) in subset.iter().enumerate() {
                if self.lt(a, b) {
                    pairs.push((i, j));
                }
            }
        }
        let sub = Poset::from_indexed(labels, &pairs).expect("induced subposet is a poset");
        (sub, subset.to_vec())
    }

    /// Width, one maximum antichain, and a minimum chain partition
    /// (Dilworth decomposition via bipartite matching).
    pub fn width(&self) -> Result<WidthInfo> {
        if self.n == 0 {
            return Err(Error::EmptyPoset);
        }
        let n = self.n;
        // Bipartite graph: left copy a -> right copy b whenever a < b.
        // Kuhn's algorithm, augmenting in ascending index order for determinism.
        let mut match_right: Vec<Option<usize>> = vec![None; n]; // right b -> left a
        let mut match_left: Vec<Option<usize>> = vec![None; n]; // left a -> right b
        for a in 0..n {
            let mut seen = vec![false; n];
            let _ = self.try_augment(a, &mut seen, &mut match_left, &mut match_right);
        }
        let matched = match_left.iter().filter(|m| m.is_some()).count();
        let width = n - matched;

        // Chains: follow successor links; heads are elements unmatched on the right.
        let mut chains = Vec::new();
        for (head, matched_left) in match_right.iter().enumerate() {
            if matched_left.is_none() {
                let mut chain = vec![head];
                let mut cur = head;
                while let Some(next) = match_left[cur] {
                    chain.push(next);
                    cur = next;
                }
                chains.push(chain);
            }
        }
        debug_assert_eq!(chains.len(), width);

        // König: minimum vertex cover from the matching, exposed elements form
        // a maximum antichain.
        let mut left_z = vec![false; n];
        let mut right_z = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&a| match_left[a].is_none()).collect();
        for &a in &stack {
            left_z[a] = true;
        }
        while let Some(a) = stack.pop() {
            for b in 0..n {
                if self.lt(a, b) && !right_z[b] && match_left[a] != Some(b) {
                    right_z[b] = true;
                    if let Some(a2) = match_right[b] {
                        if !left_z[a2] {
                            left_z[a2] = true;
                            stack.push(a2);
                        }
                    }
                }
            }
        }
        let antichain: Vec<usize> = (0..n)
            .filter(|&x| left_z[x] && !right_z[x])
            .collect();
        debug_assert_eq!(antichain.len(), width);
        debug_assert!(antichain
            .iter()
            .enumerate()
            .all(|(i, &x)| antichain[..i].iter().all(|&y| self.incomparable(x, y))));

        Ok(WidthInfo {
            width,
            antichain,
            chains: ChainPartition { chains },
        })
    }

    fn try_augment(
        &self,
        a: usize,
        seen: &mut [bool],
        match_left: &mut [Option<usize>],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for b in 0..self.n {
            if self.lt(a, b) && !seen[b] {
                seen[b] = true;
                if match_right[b].is_none()
                    || self.try_augment(match_right[b].unwrap(), seen, match_left, match_right)
                {
                    match_right[b] = Some(a);
                    match_left[a] = Some(b);
                    return true;
                }
            }
        }
        false
    }

    /// Height (number of elements on a longest chain) and one witness chain.
    pub fn height(&self) -> Result<HeightInfo> {
        if self.n == 0 {
            return Err(Error::EmptyPoset);
        }
        let n = self.n;
        let topo = toposort(&self.cover_adjacency());
        let mut len = vec![1usize; n];
        let mut parent = vec![usize::MAX; n];
        for &v in &topo {
            for a in self.down_covers(v) {
                if len[a] + 1 > len[v] || (len[a] + 1 == len[v] && a < parent[v]) {
                    len[v] = len[a] + 1;
                    parent[v] = a;
                }
            }
        }
        let height = *len.iter().max().unwrap();
        let top = (0..n).find(|&v| len[v] == height).unwrap();
        let mut chain = vec![top];
        let mut cur = top;
        while parent[cur] != usize::MAX {
            cur = parent[cur];
            chain.push(cur);
        }
        chain.reverse();
        Ok(HeightInfo { height, chain })
    }

    /// Level decomposition by repeated removal of minimal elements; level `i`
    /// holds the elements whose longest chain from below has `i + 1` elements.
    pub fn min_removal_levels(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let topo = toposort(&self.cover_adjacency());
        let mut depth = vec![0usize; n];
        for &v in &topo {
            for a in self.down_covers(v) {
                depth[v] = depth[v].max(depth[a] + 1);
            }
        }
        let h = depth.iter().copied().max().map_or(0, |d| d + 1);
        let mut levels = vec![Vec::new(); if n == 0 { 0 } else { h }];
        for v in 0..n {
            levels[depth[v]].push(v);
        }
        levels
    }

    fn cover_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.covers {
            adj[a].push(b);
        }
        adj
    }

    /// Structural equality up to element reordering: same label set, same
    /// strict order between labels.
    pub fn same_order_as(&self, other: &Poset) -> bool {
        if self.n != other.n {
            return false;
        }
        let mut map = Vec::with_capacity(self.n);
        for l in &self.labels {
            match other.index_of(l) {
                Some(j) => map.push(j),
                None => return false,
            }
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt(a, b) != other.lt(map[a], map[b]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Width computation result: the width, one maximum antichain (ascending
/// indices) and a minimum chain partition.
#[derive(Debug, Clone)]
pub struct WidthInfo {
    pub width: usize,
    pub antichain: Vec<usize>,
    pub chains: ChainPartition,
}

/// Height computation result: the height and one longest chain, ascending.
#[derive(Debug, Clone)]
pub struct HeightInfo {
    pub height: usize,
    pub chain: Vec<usize>,
}

/// A partition of the elements into chains, each listed in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPartition {
    pub chains: Vec<Vec<usize>>,
}

impl ChainPartition {
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Chain index of each element; panics if the partition misses elements.
    pub fn chain_of(&self, n: usize) -> Vec<usize> {
        let mut of = vec![usize::MAX; n];
        for (c, chain) in self.chains.iter().enumerate() {
            for &x in chain {
                of[x] = c;
            }
        }
        assert!(of.iter().all(|&c| c != usize::MAX), "partition misses elements");
        of
    }

    /// Checks the partition against a poset: disjoint cover of all elements,
    /// each chain strictly ascending.
    pub fn validate(&self, p: &Poset) -> bool {
        let mut seen = vec![false; p.n()];
        for chain in &self.chains {
            for w in chain.windows(2) {
                if !p.lt(w[0], w[1]) {
                    return false;
                }
            }
            for &x in chain {
                if x >= p.n() || seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// A linear extension: a total order on all elements refining the poset order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearExtension {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl LinearExtension {
    pub fn new(p: &Poset, order: Vec<usize>) -> Result<LinearExtension> {
        let ext = Self::permutation(p.n(), order)?;
        for a in 0..p.n() {
            for b in 0..p.n() {
                if p.lt(a, b) && ext.pos[a] > ext.pos[b] {
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
        }
        Ok(ext)
    }

    /// Validates only that `order` is a permutation of `0..n`.
    pub fn permutation(n: usize, order: Vec<usize>) -> Result<LinearExtension> {
        if order.len() != n {
            return Err(Error::NotALinearExtension {
                reason: format!("order has {} entries, poset has {}", order.len(), n),
            });
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &x) in order.iter().enumerate() {
            if x >= n || pos[x] != usize::MAX {
                return Err(Error::NotALinearExtension {
                    reason: "order is not a permutation of the elements".into(),
                });
            }
            pos[x] = i;
        }
        Ok(LinearExtension { order, pos })
    }

    pub fn from_labels<S: AsRef<str>>(p: &Poset, labels: &[S]) -> Result<LinearExtension> {
        let order = labels
            .iter()
            .map(|l| {
                p.index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownElement(l.as_ref().to_owned()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, order)
    }

    pub(crate) fn trusted(order: Vec<usize>) -> LinearExtension {
        let mut pos = vec![usize::MAX; order.len()];
        for (i, &x) in order.iter().enumerate() {
            pos[x] = i;
        }
        LinearExtension { order, pos }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn pos(&self, x: usize) -> usize {
        self.pos[x]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn to_labels(&self, p: &Poset) -> Vec<String> {
        self.order.iter().map(|&i| p.label(i).to_owned()).collect()
    }

    /// Checks this order against a poset without rebuilding it.
    pub fn is_extension_of(&self, p: &Poset) -> bool {
        self.order.len() == p.n()
            && (0..p.n()).all(|a| (0..p.n()).all(|b| !p.lt(a, b) || self.pos[a] < self.pos[b]))
    }
}

fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    const WHITE: u8 = 0;
    const GRAY: u8 = 1;
    const BLACK: u8 = 2;
    let n = adj.len();
    let mut color = vec![WHITE; n];
    let mut stack_path = Vec::new();

    fn dfs(
        v: usize,
        adj: &[Vec<usize>],
        color: &mut [u8],
        path: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        color[v] = GRAY;
        path.push(v);
        for &w in &adj[v] {
            if color[w] == GRAY {
                let start = path.iter().position(|&x| x == w).unwrap();
                return Some(path[start..].to_vec());
            }
            if color[w] == WHITE {
                if let Some(c) = dfs(w, adj, color, path) {
                    return Some(c);
                }
            }
        }
        path.pop();
        color[v] = BLACK;
        None
    }

    (0..n).find_map(|v| {
        if color[v] == WHITE {
            dfs(v, adj, &mut color, &mut stack_path)
        } else {
            None
        }
    })
}

/// Topological order of an acyclic digraph, preferring small indices first
/// (deterministic Kahn with a sorted frontier).
pub(crate) fn toposort(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut indeg = vec![0usize; n];
    for targets in adj {
        for &w in targets {
            indeg[w] += 1;
        }
    }
    let mut frontier: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    frontier.sort_unstable_by(|a, b| b.cmp(a)); // pop smallest from the back
    let mut out = Vec::with_capacity(n);
    while let Some(v) = frontier.pop() {
        out.push(v);
        let mut added = false;
        for &w in &adj[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                frontier.push(w);
                added = true;
            }
        }
        if added {
            frontier.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    debug_assert_eq!(out.len(), n, "graph must be acyclic");
    out
}

fn reduction(n: usize, lt: &[bool]) -> Vec<(usize, usize)> {
    let mut is_cover = lt.to_vec();
    for a in 0..n {
        for c in 0..n {
            if lt[a * n + c] {
                for b in 0..n {
                    if lt[c * n + b] {
                        is_cover[a * n + b] = false;
                    }
                }
            }
        }
    }
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if is_cover[a * n + b] {
                covers.push((a, b));
            }
        }
    }
    covers
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Poset {
        Poset::from_relations(
            ["0", "x", "y", "1"],
            [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")],
        )
        .unwrap()
    }

    #[test]
    fn closure_and_covers() {
        let p = Poset::from_relations(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        assert!(p.lt(0, 2), "closure must add a < c");
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn redundant_relation_is_not_a_cover() {
        let p =
            Poset::from_relations(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn cycle_reports_witness() {
        let err = Poset::from_relations(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
            .unwrap_err();
        match err {
            Error::Cycle { cycle } => {
                assert_eq!(cycle.len(), 3);
                assert!(cycle.contains(&"a".to_string()));
            }
            other => panic!("expected cycle error, got {other:?}"),
        }
    }

    #[test]
    fn width_of_diamond() {
        let p = diamond();
        let w = p.width().unwrap();
        assert_eq!(w.width, 2);
        assert_eq!(w.antichain.len(), 2);
        assert!(p.incomparable(w.antichain[0], w.antichain[1]));
        assert!(w.chains.validate(&p));
        assert_eq!(w.chains.len(), 2);
    }

    #[test]
    fn width_of_chain_and_antichain() {
        let chain = Poset::from_relations(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(chain.width().unwrap().width, 1);
        let anti = Poset::from_relations::<&str, &str, &str>(["a", "b", "c"], []).unwrap();
        assert_eq!(anti.width().unwrap().width, 3);
        assert_eq!(anti.height().unwrap().height, 1);
    }

    #[test]
    fn height_and_chain() {
        let p = diamond();
        let h = p.height().unwrap();
        assert_eq!(h.height, 3);
        assert_eq!(h.chain.len(), 3);
        for w in h.chain.windows(2) {
            assert!(p.lt(w[0], w[1]));
        }
    }

    #[test]
    fn empty_poset_width_height_error() {
        let p = Poset::from_relations::<String, String, String>([], []).unwrap();
        assert_eq!(p.width().unwrap_err(), Error::EmptyPoset);
        assert_eq!(p.height().unwrap_err(), Error::EmptyPoset);
    }

    #[test]
    fn bounds_added_only_when_missing() {
        let two = Poset::from_relations::<&str, &str, &str>(["x", "y"], []).unwrap();
        let b = two.with_bounds(true, false);
        assert_eq!(b.n(), 3);
        let z = b.zero().unwrap();
        assert_eq!(b.label(z), "0");
        assert_eq!(b.covers().len(), 2);

        let p = diamond();
        let same = p.with_bounds(true, true);
        assert_eq!(same.n(), 4, "diamond already has both bounds");
    }

    #[test]
    fn fresh_bound_labels_avoid_collisions() {
        let p = Poset::from_relations::<&str, &str, &str>(["0", "q"], []).unwrap();
        let b = p.with_bounds(true, false);
        assert_eq!(b.label(b.zero().unwrap()), "_0");
    }

    #[test]
    fn linear_extension_checks() {
        let p = diamond();
        let ok = LinearExtension::from_labels(&p, &["0", "y", "x", "1"]).unwrap();
        assert!(ok.is_extension_of(&p));
        let err = LinearExtension::from_labels(&p, &["x", "0", "y", "1"]).unwrap_err();
        assert!(matches!(err, Error::NotALinearExtension { .. }));
    }

    #[test]
    fn min_removal_levels_partition() {
        let p = diamond();
        let levels = p.min_removal_levels();
        assert_eq!(levels.len(), 3);
        assert_eq!(levels[0], vec![0]);
        assert_eq!(levels[1], vec![1, 2]);
        assert_eq!(levels[2], vec![3]);
    }
}
