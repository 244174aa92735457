//! Rayon-backed [`Executor`].

use golod_core::exec::Executor;
use rayon::prelude::*;

/// Evaluates scan indices on a rayon pool; results still come back in index
/// order, so reports do not depend on the worker count.
pub struct Parallel {
    pool: rayon::ThreadPool,
}

impl Parallel {
    /// A pool with `jobs` workers, or rayon's default when `None` or zero.
    pub fn new(jobs: Option<usize>) -> Result<Self, rayon::ThreadPoolBuildError> {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = jobs.filter(|&n| n > 0) {
            b = b.num_threads(n);
        }
        Ok(Parallel { pool: b.build()? })
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl Executor for Parallel {
    fn find_first<T, F>(&self, n: usize, f: F) -> Option<(usize, T)>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        self.pool.install(|| {
            (0..n)
                .into_par_iter()
                .find_map_first(|i| f(i).map(|t| (i, t)))
        })
    }
}
