//! Queue layouts of finite partially ordered sets.
//!
//! A *queue layout* of a poset consists of a linear extension together with a
//! partition of the cover relation into queues such that no two covers in the
//! same queue are nested under the extension. This crate provides:
//!
//! - core poset machinery: transitive closure/reduction, width (Dilworth
//!   decomposition), height, linear extensions ([`Poset`], [`LinearExtension`]);
//! - rainbow computation and queue assignment for a fixed extension, plus an
//!   independent layout verifier ([`max_rainbow`], [`assign_queues`],
//!   [`verify_layout`]);
//! - constructive layout strategies with certified bounds for structured
//!   posets: width-2 orders, paired chain partitions, crown-free orders,
//!   two-dimensional orders, bounded-height orders, and planar orders with a
//!   drawing (see [`strategies`]);
//! - generators for the extremal families used to exercise those bounds
//!   (see [`constructions`]);
//! - an exact queue-number solver for small instances ([`exact_queue_number`]);
//! - JSON/DOT interchange for posets, drawings, and layouts ([`io`]).
//!
//! Everything is deterministic: equal inputs produce equal outputs, including
//! tie-breaks inside the matching, strategy, and solver code, and independent
//! of the `parallel` feature (on by default; disable for a rayon-free build).

pub mod conjugate;
pub mod constructions;
pub mod diagram;
mod error;
mod exec;
pub mod io;
mod poset;

pub mod layout;
pub mod solver;
pub mod strategies;

pub use conjugate::{conjugate, ConjugateMethod, ConjugateResult};
pub use diagram::UpwardDiagram;
pub use error::{Error, Result};
pub use layout::{
    assign_queues, cover_graph_rainbow, max_rainbow, verify_layout, QueueLayout, Rainbow,
    ViolationReport,
};
pub use poset::{ChainPartition, HeightInfo, LinearExtension, Poset, WidthInfo};
pub use solver::{
    exact_queue_number, exact_queue_number_batch, exact_queue_number_with, SolveOptions,
    SolveOutcome,
};
pub use strategies::{
    any_extension_layout, color_split_extension, crown_free_layout, gray_graph,
    lazy_width2_layout, leftmost_layout, paired_chain_layout, planar_width_layout,
    CrownEmbedding, CrownFreeResult, GrayGraph,
};
