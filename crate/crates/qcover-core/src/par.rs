//! Data-parallel helpers. With the `parallel` feature the batch entry points
//! fan out on the rayon pool; without it they run sequentially with the same
//! deterministic output order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over a batch of independent cases, preserving input order.
#[cfg(feature = "parallel")]
pub fn map_cases<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_cases<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}

/// Always-sequential variant, kept callable with the feature on so the
/// benchmarks can compare both schedules.
pub fn map_cases_seq<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}
