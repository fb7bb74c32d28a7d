use thiserror::Error;

/// Errors shared across the library.
///
/// Operations that take a poset and an order validate their inputs and report
/// structural problems through this type; verification mismatches (a layout
/// that is merely *wrong*) are reported as data instead, see
/// [`crate::layout::ViolationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The generating relation contains a directed cycle; one witness cycle is listed.
    #[error("relation is cyclic: {}", cycle.join(" < "))]
    Cycle { cycle: Vec<String> },

    /// An element id that does not belong to the poset.
    #[error("unknown element {0:?}")]
    UnknownElement(String),

    /// A duplicated element id in a poset or order definition.
    #[error("duplicate element {0:?}")]
    DuplicateElement(String),

    /// The poset has no elements but the operation needs at least one.
    #[error("operation undefined on the empty poset")]
    EmptyPoset,

    /// The given order is not a linear extension of the poset.
    #[error("not a linear extension: {reason}")]
    NotALinearExtension { reason: String },

    /// A width-bounded strategy was applied to a poset that is too wide.
    #[error("poset has width {width}, strategy requires width at most {max}")]
    WidthExceeded { width: usize, max: usize },

    /// The incomparability graph admits no transitive orientation.
    #[error("poset has dimension greater than two; no conjugate order exists")]
    NotTwoDimensional,

    /// An operation requiring a global minimum and maximum was given a poset without them.
    #[error("poset lacks a {0}")]
    MissingBounds(&'static str),

    /// The level partition handed to the colour-split strategy is not the
    /// minimal-element level decomposition of the poset.
    #[error("invalid level partition: {0}")]
    InvalidLevels(String),

    /// The drawing is not a valid upward plane diagram of its poset.
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    /// The planar strategy could not complete its extremum augmentation.
    #[error("diagram augmentation failed: {0}")]
    AugmentationFailed(String),

    /// The vertex classes handed to the bipartite builder do not partition the vertices.
    #[error("not a bipartition: {0}")]
    NotBipartition(String),

    /// Brute-force helper refused an input above its hard size cap.
    #[error("input too large for brute force: {size} {what} (limit {limit})")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    /// Malformed input file.
    #[error("parse error: {0}")]
    Parse(String),

    /// A generator was asked for a parameter outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
