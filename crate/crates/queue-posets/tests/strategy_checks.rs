//! Cross-checks every layout strategy on seeded corpora: outputs must pass
//! the independent verifier, meet their advertised bounds, and never beat
//! the exact solver.

mod common;

use queue_posets::constructions::q_width;
use queue_posets::solver::exhaustive_queue_number;
use queue_posets::{
    any_extension_layout, color_split_extension, cover_graph_rainbow, crown_free_layout,
    exact_queue_number, exact_queue_number_batch, exact_queue_number_with, lazy_width2_layout,
    leftmost_layout, max_rainbow, paired_chain_layout, verify_layout, CrownFreeResult, Error,
    Poset, SolveOptions, SolveOutcome,
};

#[test]
fn any_extension_respects_the_width_square_bound() {
    for seed in 0..60u64 {
        let mut r = common::rng(seed);
        let n = 4 + (seed as usize % 12);
        let p = common::random_poset(&mut r, n, 0.25);
        let w = p.width().unwrap().width;
        let layout = any_extension_layout(&p).unwrap();
        assert!(verify_layout(&p, &layout).is_ok(), "seed {seed}");
        assert!(layout.queue_count <= w * w, "seed {seed}");
    }
}

#[test]
fn lazy_handles_narrow_posets_and_rejects_wide_ones() {
    for seed in 0..60u64 {
        let mut r = common::rng(1000 + seed);
        let p = common::random_width_at_most(&mut r, 6 + (seed as usize % 20), 2);
        let layout = lazy_width2_layout(&p).unwrap();
        assert!(verify_layout(&p, &layout).is_ok(), "seed {seed}");
        assert!(layout.queue_count <= 2, "seed {seed}");
    }
    let wide = Poset::from_indexed(common::labels(3), &[]).unwrap();
    assert!(matches!(
        lazy_width2_layout(&wide),
        Err(Error::WidthExceeded { width: 3, max: 2 })
    ));
}

#[test]
fn paired_chains_meet_the_generic_bound() {
    for seed in 0..60u64 {
        let mut r = common::rng(2000 + seed);
        let p = common::random_width_at_most(&mut r, 6 + (seed as usize % 14), 4);
        let w = p.width().unwrap().width;
        let layout = paired_chain_layout(&p).unwrap();
        assert!(verify_layout(&p, &layout).is_ok(), "seed {seed}");
        assert!(layout.queue_count <= w * w - 2 * (w / 2), "seed {seed}");
    }
}

#[test]
fn interval_and_series_parallel_orders_are_crown_free() {
    for seed in 0..40u64 {
        let mut r = common::rng(3000 + seed);
        let n = 5 + (seed as usize % 16);
        let p = if seed % 2 == 0 {
            common::random_interval_order(&mut r, n)
        } else {
            common::random_series_parallel(&mut r, n)
        };
        let w = p.width().unwrap().width;
        match crown_free_layout(&p).unwrap() {
            CrownFreeResult::Layout(layout) => {
                assert!(verify_layout(&p, &layout).is_ok(), "seed {seed}");
                assert!(layout.queue_count <= w, "seed {seed}");
            }
            CrownFreeResult::Embedded(_) => panic!("seed {seed}: found a crown"),
        }
    }
}

#[test]
fn leftmost_lays_out_bounded_planar_lattices() {
    for seed in 0..40u64 {
        let mut r = common::rng(4000 + seed);
        let n = 3 + (seed as usize % 10);
        let q = common::random_two_dimensional(&mut r, n);
        let p = q.with_bounds(q.zero().is_none(), q.one().is_none());
        let layout = leftmost_layout(&p, None).unwrap();
        assert!(verify_layout(&p, &layout).is_ok(), "seed {seed}");
    }
}

#[test]
fn color_split_tracks_the_cover_graph_rainbow() {
    for seed in 0..60u64 {
        let mut r = common::rng(5000 + seed);
        let n = 4 + (seed as usize % 14);
        let p = common::random_height_at_most(&mut r, n, 4);
        let order = common::random_permutation(&mut r, n);
        let levels = p.min_removal_levels();
        let h = levels.len();
        let (k, _) = cover_graph_rainbow(&p, &order);
        let ext = color_split_extension(&p, &order, &levels).unwrap();
        assert!(ext.is_extension_of(&p), "seed {seed}");
        let (out, _) = max_rainbow(&p, &ext).unwrap();
        assert!(out <= 2 * h.saturating_sub(1) * k, "seed {seed}: {out} > 2*{}*{k}", h - 1);
    }
}

#[test]
fn no_strategy_beats_the_exact_solver() {
    for seed in 0..30u64 {
        let mut r = common::rng(6000 + seed);
        let n = 4 + (seed as usize % 6);
        let p = common::random_poset(&mut r, n, 0.3);
        let outcome = exact_queue_number(&p);
        let SolveOutcome::Exact { k, layout } = outcome else {
            panic!("seed {seed}: solve did not finish");
        };
        assert_eq!(layout.queue_count, k, "seed {seed}");
        assert!(verify_layout(&p, &layout).is_ok(), "seed {seed}");

        assert!(k <= any_extension_layout(&p).unwrap().queue_count, "seed {seed}");
        if let CrownFreeResult::Layout(l) = crown_free_layout(&p).unwrap() {
            assert!(k <= l.queue_count, "seed {seed}");
        }
        if p.width().unwrap().width <= 4 {
            assert!(k <= paired_chain_layout(&p).unwrap().queue_count, "seed {seed}");
        }
    }
}

#[test]
fn pruning_never_changes_the_answer() {
    for seed in 0..50u64 {
        let mut r = common::rng(7000 + seed);
        let n = 2 + (seed as usize % 8);
        let p = common::random_poset(&mut r, n, 0.3);
        assert_eq!(
            exact_queue_number(&p).exact().unwrap(),
            exhaustive_queue_number(&p),
            "seed {seed}"
        );
    }
}

#[test]
fn limits_and_batches_stay_consistent() {
    let (p, _) = q_width(2).unwrap();
    assert_eq!(exact_queue_number(&p).exact(), Some(2));
    let limited = exact_queue_number_with(
        &p,
        &SolveOptions {
            limit: Some(1),
            ..SolveOptions::default()
        },
    );
    assert!(limited.exact().is_none());
    assert_eq!(limited.lower_bound(), 2);

    let posets: Vec<Poset> = (0..12u64)
        .map(|s| common::random_poset(&mut common::rng(8000 + s), 6, 0.3))
        .collect();
    let singles: Vec<usize> = posets
        .iter()
        .map(|p| exact_queue_number(p).exact().unwrap())
        .collect();
    let batch = exact_queue_number_batch(posets, &SolveOptions::default());
    assert_eq!(batch.len(), singles.len());
    for (outcome, want) in batch.iter().zip(singles) {
        assert_eq!(outcome.exact(), Some(want));
    }
}
