//! Evaluation of independent index ranges, in parallel when the `parallel`
//! feature is enabled and sequentially otherwise.
//!
//! Every checker in this crate walks a finite set of argument tuples and
//! evaluates one residual per tuple. The tuples are independent, so the walk
//! is a data-parallel map. Results are always collected in index order, which
//! keeps reports identical between the two modes.

use std::sync::atomic::{AtomicBool, Ordering};

static PARALLEL: AtomicBool = AtomicBool::new(true);

/// Switches between the parallel and sequential paths at runtime.
///
/// Only meaningful when the crate is built with the `parallel` feature; the
/// benches use it to compare both paths inside one binary.
pub fn set_parallel(enabled: bool) {
    PARALLEL.store(enabled, Ordering::Relaxed);
}

pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && PARALLEL.load(Ordering::Relaxed)
}

/// Evaluates `f` on `0..total` and keeps the `Some` results, in index order.
pub fn filter_map_range<T, F>(total: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        use rayon::prelude::*;
        return (0..total).into_par_iter().filter_map(f).collect();
    }
    (0..total).filter_map(f).collect()
}

/// Evaluates `f` on `0..total`, in index order.
pub fn map_range<T, F>(total: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        use rayon::prelude::*;
        return (0..total).into_par_iter().map(f).collect();
    }
    (0..total).map(f).collect()
}

/// Splits a linear index into a multi-index over `dims` (first slot most
/// significant).
pub fn unrank(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &dim) in dims.iter().enumerate().rev() {
        out[slot] = index % dim;
        index /= dim;
    }
    out
}

pub fn rank(multi: &[usize], dims: &[usize]) -> usize {
    multi
        .iter()
        .zip(dims)
        .fold(0, |acc, (&i, &dim)| acc * dim + i)
}
