//! Execution policy for sweeps and sampling loops. Work is split into
//! indexed chunks whose results are combined in index order, so both
//! policies produce bit-identical output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Uses rayon when the `parallel` feature is on, otherwise runs
    /// sequentially.
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// `f` applied to every item, results in input order.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// `f(0), …, f(n−1)` in order.
pub fn map_range<R, F>(exec: Exec, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// Chunked map with an ordered left fold.
pub fn map_fold<R, A, F, G>(exec: Exec, n: usize, f: F, init: A, fold: G) -> A
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
    G: FnMut(A, R) -> A,
{
    map_range(exec, n, f).into_iter().fold(init, fold)
}
