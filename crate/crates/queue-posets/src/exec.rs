//! Thin switch between rayon-backed and sequential execution.
//!
//! The `parallel` feature (on by default) routes the helpers below through
//! rayon; without it they degrade to plain iteration so the crate stays
//! dependency-free and deterministic on single-threaded targets. Results are
//! identical either way — parallel call sites are restricted to order-stable
//! combinators.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving input order.
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// Returns `f(item)` for the first item (in input order) where it is `Some`.
/// With rayon this is `find_map_first`, which matches the sequential answer.
pub fn first_some<T, U, F>(items: Vec<T>, f: F) -> Option<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().find_map(f)
    }
}
