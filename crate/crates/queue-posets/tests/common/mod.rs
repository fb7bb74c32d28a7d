//! Seeded corpus generators and subset-enumeration oracles shared by the
//! integration suites. Same seed, same corpus.

#![allow(dead_code)]

use queue_posets::{LinearExtension, Poset};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// Random order of width ≤ w: a fixed partition into w chains plus random
/// index-increasing cross relations (the partition stays a chain cover).
pub fn random_width_at_most(rng: &mut ChaCha8Rng, n: usize, w: usize) -> Poset {
    let chain_of: Vec<usize> = (0..n).map(|i| if i < w { i } else { rng.gen_range(0..w) }).collect();
    let mut pairs = Vec::new();
    let mut last: Vec<Option<usize>> = vec![None; w];
    for i in 0..n {
        if let Some(prev) = last[chain_of[i]] {
            pairs.push((prev, i));
        }
        last[chain_of[i]] = Some(i);
    }
    for _ in 0..rng.gen_range(0..=n) {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i != j {
            pairs.push((i.min(j), i.max(j)));
        }
    }
    Poset::from_indexed(labels(n), &pairs).expect("index-increasing pairs are acyclic")
}

/// Interval order from n random real intervals: u < v iff u's interval ends
/// before v's begins.
pub fn random_interval_order(rng: &mut ChaCha8Rng, n: usize) -> Poset {
    let intervals: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            let a: f64 = rng.gen();
            let len: f64 = rng.gen();
            (a, a + 0.02 + 0.6 * len)
        })
        .collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if intervals[i].1 < intervals[j].0 {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_indexed(labels(n), &pairs).expect("interval containment is acyclic")
}

/// Series-parallel order by random recursive composition.
pub fn random_series_parallel(rng: &mut ChaCha8Rng, n: usize) -> Poset {
    fn compose(rng: &mut ChaCha8Rng, base: usize, n: usize, pairs: &mut Vec<(usize, usize)>) {
        if n <= 1 {
            return;
        }
        let k = rng.gen_range(1..n);
        compose(rng, base, k, pairs);
        compose(rng, base + k, n - k, pairs);
        if rng.gen_bool(0.5) {
            for a in base..base + k {
                for b in base + k..base + n {
                    pairs.push((a, b));
                }
            }
        }
    }
    let mut pairs = Vec::new();
    compose(rng, 0, n, &mut pairs);
    Poset::from_indexed(labels(n), &pairs).expect("series composition is acyclic")
}

/// Random order of height ≤ h via a level assignment; relations only climb
/// levels.
pub fn random_height_at_most(rng: &mut ChaCha8Rng, n: usize, h: usize) -> Poset {
    let level: Vec<usize> = (0..n).map(|_| rng.gen_range(0..h)).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if level[i] < level[j] && rng.gen_bool(0.3) {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_indexed(labels(n), &pairs).expect("level-increasing pairs are acyclic")
}

/// Unconstrained random order: each index-increasing pair independently.
pub fn random_poset(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_indexed(labels(n), &pairs).expect("index-increasing pairs are acyclic")
}

/// Two-dimensional order: intersection of the index order with one random
/// permutation.
pub fn random_two_dimensional(rng: &mut ChaCha8Rng, n: usize) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if perm[i] < perm[j] {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_indexed(labels(n), &pairs).expect("intersection of orders is acyclic")
}

/// Uniformly random linear extension (Kahn with random choices).
pub fn random_extension(rng: &mut ChaCha8Rng, p: &Poset) -> LinearExtension {
    let n = p.n();
    let mut indeg = vec![0usize; n];
    for &(_, b) in p.covers() {
        indeg[b] += 1;
    }
    let mut avail: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while !avail.is_empty() {
        let k = rng.gen_range(0..avail.len());
        let v = avail.swap_remove(k);
        order.push(v);
        for u in p.up_covers(v) {
            indeg[u] -= 1;
            if indeg[u] == 0 {
                avail.push(u);
            }
        }
    }
    LinearExtension::new(p, order).expect("Kahn emits a linear extension")
}

/// Uniformly random vertex ordering (not necessarily an extension).
pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> LinearExtension {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    LinearExtension::permutation(n, order).expect("permutation of 0..n")
}

/// Maximum antichain size by subset enumeration (n ≤ 16).
pub fn brute_max_antichain(p: &Poset) -> usize {
    let n = p.n();
    assert!(n <= 16, "oracle is exponential");
    let mut best = 0;
    for mask in 0u32..1 << n {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if members.len() > best
            && members
                .iter()
                .enumerate()
                .all(|(k, &u)| members[k + 1..].iter().all(|&v| p.incomparable(u, v)))
        {
            best = members.len();
        }
    }
    best
}

/// Maximum chain size by subset enumeration (n ≤ 16).
pub fn brute_max_chain(p: &Poset) -> usize {
    let n = p.n();
    assert!(n <= 16, "oracle is exponential");
    let mut best = 0;
    for mask in 0u32..1 << n {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if members.len() > best
            && members
                .iter()
                .enumerate()
                .all(|(k, &u)| members[k + 1..].iter().all(|&v| p.comparable(u, v)))
        {
            best = members.len();
        }
    }
    best
}
