//! Exact queue-number computation by iterative-deepening exhaustive search,
//! plus brute-force reference oracles for tests.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::exec;
use crate::layout::{assign_queues, QueueLayout};
use crate::poset::{LinearExtension, Poset};

/// Tuning knobs for [`exact_queue_number_with`].
#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    /// Stop after target `limit`: if no extension needs ≤ `limit` queues,
    /// report `LowerBoundOnly(limit + 1)` instead of searching further.
    pub limit: Option<usize>,
    /// Wall-clock budget for the whole solve.
    pub budget: Option<Duration>,
    /// Worker threads for the first branching level. `Some(1)` forces the
    /// sequential path; `None` defers to the `QUEUEPOSET_THREADS` environment
    /// variable, or rayon's default. Without the `parallel` feature the
    /// search is always sequential.
    pub threads: Option<usize>,
}

/// Result of an exact solve.
#[derive(Debug, Clone)]
pub enum SolveOutcome {
    /// `k` is the queue-number; `layout` is a witness using `k` queues.
    Exact { k: usize, layout: QueueLayout },
    /// Search stopped at the requested limit: the queue-number is at least
    /// `lower_bound` (= limit + 1) and no witness exists within the limit.
    LowerBoundOnly { lower_bound: usize },
    /// Budget exhausted: all targets below `lower_bound` are refuted.
    Timeout { lower_bound: usize },
}

impl SolveOutcome {
    /// The exact queue-number, when the search finished.
    pub fn exact(&self) -> Option<usize> {
        match self {
            SolveOutcome::Exact { k, .. } => Some(*k),
            _ => None,
        }
    }

    /// Best verified lower bound on the queue-number in any outcome.
    pub fn lower_bound(&self) -> usize {
        match self {
            SolveOutcome::Exact { k, .. } => *k,
            SolveOutcome::LowerBoundOnly { lower_bound } | SolveOutcome::Timeout { lower_bound } => {
                *lower_bound
            }
        }
    }
}

/// Computes the queue-number of `p` with default options (no limit, no
/// budget). Intended for desk-scale instances (roughly ≤ 20 elements).
pub fn exact_queue_number(p: &Poset) -> SolveOutcome {
    exact_queue_number_with(p, &SolveOptions::default())
}

/// Solves a whole batch, one instance per worker when the `parallel`
/// feature is on (each solve then runs its own search sequentially).
/// Output order matches input order in both modes.
pub fn exact_queue_number_batch(posets: Vec<Poset>, opts: &SolveOptions) -> Vec<SolveOutcome> {
    let per_instance = SolveOptions {
        threads: Some(1),
        ..opts.clone()
    };
    exec::map_collect(posets, move |p| exact_queue_number_with(&p, &per_instance))
}

/// Iterative deepening on the target queue count `t = 1, 2, …`. For each
/// target, linear extensions are built depth-first by appending a minimal
/// remaining element (ascending index); a branch is pruned as soon as the
/// largest rainbow among fully-placed covers exceeds `t`. Positions of placed
/// elements never move, so that rainbow can only grow along a branch and the
/// pruning is sound; the first target admitting a complete extension is the
/// queue-number.
pub fn exact_queue_number_with(p: &Poset, opts: &SolveOptions) -> SolveOutcome {
    let identity = LinearExtension::trusted(toposort_order(p));
    if p.covers().is_empty() {
        let layout = assign_queues(p, &identity).expect("identity order extends any antichain");
        return SolveOutcome::Exact { k: 0, layout };
    }
    let deadline = opts.budget.map(|b| Instant::now() + b);
    let abort = Arc::new(AtomicBool::new(false));
    let mut t = 1;
    loop {
        if let Some(limit) = opts.limit {
            if t > limit {
                return SolveOutcome::LowerBoundOnly { lower_bound: limit + 1 };
            }
        }
        match search_target(p, t, deadline, &abort, opts.threads) {
            Dfs::Found(order) => {
                let ext = LinearExtension::trusted(order);
                let layout = assign_queues(p, &ext).expect("search yields a linear extension");
                debug_assert_eq!(layout.queue_count, t);
                return SolveOutcome::Exact { k: t, layout };
            }
            Dfs::Exhausted => t += 1,
            Dfs::Aborted => return SolveOutcome::Timeout { lower_bound: t },
        }
    }
}

/// Prune-free reference: enumerates every linear extension and minimizes the
/// maximum rainbow. Exponential; used to validate the pruned search in tests.
pub fn exhaustive_queue_number(p: &Poset) -> usize {
    let mut enumerator = Enumerator {
        state: SearchState::new(p),
        best: usize::MAX,
    };
    enumerator.run(p);
    if p.covers().is_empty() {
        0
    } else {
        enumerator.best
    }
}

/// Maximum pairwise-nested subset of covers by subset enumeration. The
/// test-facing gold standard for the rainbow computation; rejects inputs
/// with more than 20 covers.
pub fn rainbow_bruteforce_oracle(p: &Poset, ext: &LinearExtension) -> Result<usize> {
    const LIMIT: usize = 20;
    let m = p.covers().len();
    if m > LIMIT {
        return Err(Error::TooLarge {
            what: "covers",
            size: m,
            limit: LIMIT,
        });
    }
    assert!(ext.is_extension_of(p), "ext must be a linear extension of p");
    let intervals: Vec<(usize, usize)> = p
        .covers()
        .iter()
        .map(|&(a, b)| (ext.pos(a), ext.pos(b)))
        .collect();
    let mut best = 0;
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    subsets(&intervals, 0, &mut chosen, &mut best);
    Ok(best)
}

fn subsets(
    intervals: &[(usize, usize)],
    idx: usize,
    chosen: &mut Vec<(usize, usize)>,
    best: &mut usize,
) {
    *best = (*best).max(chosen.len());
    if idx == intervals.len() || chosen.len() + (intervals.len() - idx) <= *best {
        return;
    }
    let cand = intervals[idx];
    if chosen.iter().all(|&c| contains(c, cand) || contains(cand, c)) {
        chosen.push(cand);
        subsets(intervals, idx + 1, chosen, best);
        chosen.pop();
    }
    subsets(intervals, idx + 1, chosen, best);
}

fn contains(outer: (usize, usize), inner: (usize, usize)) -> bool {
    outer.0 < inner.0 && inner.1 < outer.1
}

fn toposort_order(p: &Poset) -> Vec<usize> {
    let mut adj = vec![Vec::new(); p.n()];
    for &(a, b) in p.covers() {
        adj[a].push(b);
    }
    crate::poset::toposort(&adj)
}

enum Dfs {
    Found(Vec<usize>),
    Exhausted,
    Aborted,
}

/// Mutable search state shared by the pruned and prune-free traversals.
#[derive(Clone)]
struct SearchState {
    n: usize,
    /// Down/up cover neighbourhoods, ascending.
    down: Vec<Vec<usize>>,
    up: Vec<Vec<usize>>,
    order: Vec<usize>,
    pos: Vec<usize>,
    placed: Vec<bool>,
    /// Unplaced cover-predecessors per element; zero means "minimal remaining".
    blockers: Vec<usize>,
    /// Fully-placed covers as (left position, rainbow depth), completion order.
    /// The depth of a cover is fixed the moment its upper end is placed: any
    /// cover it contains completed earlier, and no later cover fits inside it.
    completed: Vec<(usize, usize)>,
    ticks: u64,
}

impl SearchState {
    fn new(p: &Poset) -> SearchState {
        let n = p.n();
        let mut down = vec![Vec::new(); n];
        let mut up = vec![Vec::new(); n];
        for &(a, b) in p.covers() {
            down[b].push(a);
            up[a].push(b);
        }
        let blockers = (0..n).map(|v| down[v].len()).collect();
        SearchState {
            n,
            down,
            up,
            order: Vec::with_capacity(n),
            pos: vec![usize::MAX; n],
            placed: vec![false; n],
            blockers,
            completed: Vec::new(),
            ticks: 0,
        }
    }

    /// Places `v`, returning how many covers completed, or `None` (state
    /// unchanged) if some completed cover would head a rainbow deeper than `t`.
    fn place(&mut self, v: usize, t: usize) -> Option<usize> {
        let at = self.order.len();
        let mut batch = Vec::with_capacity(self.down[v].len());
        for &a in &self.down[v] {
            let left = self.pos[a];
            let inner = self
                .completed
                .iter()
                .filter(|&&(l, _)| l > left)
                .map(|&(_, d)| d)
                .max()
                .unwrap_or(0);
            let depth = inner + 1;
            if depth > t {
                return None;
            }
            batch.push((left, depth));
        }
        let completed = batch.len();
        self.completed.extend(batch);
        self.order.push(v);
        self.pos[v] = at;
        self.placed[v] = true;
        for i in 0..self.up[v].len() {
            let w = self.up[v][i];
            self.blockers[w] -= 1;
        }
        Some(completed)
    }

    fn unplace(&mut self, v: usize, completed: usize) {
        for i in 0..self.up[v].len() {
            let w = self.up[v][i];
            self.blockers[w] += 1;
        }
        self.placed[v] = false;
        self.pos[v] = usize::MAX;
        self.order.pop();
        self.completed.truncate(self.completed.len() - completed);
    }

    fn available(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&v| !self.placed[v] && self.blockers[v] == 0)
    }
}

struct TargetSearch {
    state: SearchState,
    t: usize,
    deadline: Option<Instant>,
    abort: Arc<AtomicBool>,
}

impl TargetSearch {
    fn dfs(&mut self) -> Dfs {
        self.state.ticks += 1;
        if self.state.ticks & 255 == 0 && self.interrupted() {
            return Dfs::Aborted;
        }
        if self.state.order.len() == self.state.n {
            return Dfs::Found(self.state.order.clone());
        }
        let candidates: Vec<usize> = self.state.available().collect();
        for v in candidates {
            if let Some(completed) = self.state.place(v, self.t) {
                match self.dfs() {
                    Dfs::Exhausted => self.state.unplace(v, completed),
                    found_or_aborted => return found_or_aborted,
                }
            }
        }
        Dfs::Exhausted
    }

    fn interrupted(&self) -> bool {
        if self.abort.load(Ordering::Relaxed) {
            return true;
        }
        if let Some(dl) = self.deadline {
            if Instant::now() >= dl {
                self.abort.store(true, Ordering::Relaxed);
                return true;
            }
        }
        false
    }
}

fn search_target(
    p: &Poset,
    t: usize,
    deadline: Option<Instant>,
    abort: &Arc<AtomicBool>,
    threads: Option<usize>,
) -> Dfs {
    let base = SearchState::new(p);
    let workers = effective_threads(threads);
    if workers == 1 {
        let mut search = TargetSearch {
            state: base,
            t,
            deadline,
            abort: Arc::clone(abort),
        };
        return search.dfs();
    }
    // Parallelize over the first branching level only; `first_some` keeps the
    // leftmost result, so the answer matches the sequential search.
    let roots: Vec<usize> = base.available().collect();
    let run_root = |v: usize| -> Option<Dfs> {
        let mut search = TargetSearch {
            state: base.clone(),
            t,
            deadline,
            abort: Arc::clone(abort),
        };
        match search.state.place(v, t) {
            None => None,
            Some(_) => match search.dfs() {
                Dfs::Exhausted => None,
                other => Some(other),
            },
        }
    };
    let outcome = in_pool(workers, || exec::first_some(roots, run_root));
    outcome.unwrap_or(Dfs::Exhausted)
}

/// Resolves the worker count: explicit option, then `QUEUEPOSET_THREADS`,
/// then rayon's default. Always 1 without the `parallel` feature.
fn effective_threads(threads: Option<usize>) -> usize {
    if cfg!(not(feature = "parallel")) {
        return 1;
    }
    let env = std::env::var("QUEUEPOSET_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&k| k > 0);
    match threads.or(env) {
        Some(k) => k,
        #[cfg(feature = "parallel")]
        None => rayon::current_num_threads(),
        #[cfg(not(feature = "parallel"))]
        None => 1,
    }
}

#[cfg(feature = "parallel")]
fn in_pool<R: Send>(workers: usize, f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn in_pool<R: Send>(_workers: usize, f: impl FnOnce() -> R + Send) -> R {
    f()
}

struct Enumerator {
    state: SearchState,
    best: usize,
}

impl Enumerator {
    fn run(&mut self, p: &Poset) {
        if self.state.order.len() == self.state.n {
            let ext = LinearExtension::trusted(self.state.order.clone());
            let (k, _) = crate::layout::max_rainbow(p, &ext).expect("enumerated extension");
            self.best = self.best.min(k);
            return;
        }
        let candidates: Vec<usize> = self.state.available().collect();
        for v in candidates {
            let completed = self
                .state
                .place(v, usize::MAX)
                .expect("no pruning at usize::MAX");
            self.run(p);
            self.state.unplace(v, completed);
        }
    }
}
