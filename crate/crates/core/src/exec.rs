//! Search strategies for the subset scans.

/// Finds the first index in `0..n` at which `f` returns `Some`.
///
/// Implementations may evaluate indices in any order or concurrently, but
/// must return the smallest such index so that reports stay deterministic.
pub trait Executor: Sync {
    fn find_first<T, F>(&self, n: usize, f: F) -> Option<(usize, T)>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send;
}

/// In-order evaluation on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn find_first<T, F>(&self, n: usize, f: F) -> Option<(usize, T)>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        (0..n).find_map(|i| f(i).map(|t| (i, t)))
    }
}
