use std::sync::Arc;

use pqclass_core::RankMapper;
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

/// Rayon-backed [`RankMapper`] with an optional dedicated pool.
#[derive(Clone, Default)]
pub struct Parallel {
    pool: Option<Arc<ThreadPool>>,
}

impl Parallel {
    /// `jobs = None` uses rayon's global pool (machine parallelism).
    pub fn new(jobs: Option<usize>) -> anyhow::Result<Self> {
        let pool = match jobs {
            Some(k) => Some(Arc::new(ThreadPoolBuilder::new().num_threads(k.max(1)).build()?)),
            None => None,
        };
        Ok(Parallel { pool })
    }

    pub fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        match &self.pool {
            Some(pool) => pool.install(op),
            None => op(),
        }
    }

    /// Order-preserving parallel map over a slice.
    pub fn map<I, T, F>(&self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        self.install(|| items.par_iter().map(f).collect())
    }
}

impl RankMapper for Parallel {
    fn map_ranks<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        self.install(|| (0..count).into_par_iter().map(f).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pqclass_core::{basis_of_ca, basis_of_ca_with, PatternClass};

    #[test]
    fn parallel_search_matches_serial() {
        let c = PatternClass::new(["123".parse().unwrap(), "231".parse().unwrap()]);
        let par = Parallel::new(Some(3)).unwrap();
        assert_eq!(basis_of_ca_with(&c, 7, &par), basis_of_ca(&c, 7));
    }
}
