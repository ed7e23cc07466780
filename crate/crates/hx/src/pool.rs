use hx_core::Executor;
use rayon::prelude::*;

/// A rayon thread pool behind the core [`Executor`] interface.
pub struct Pool {
    pool: rayon::ThreadPool,
}

impl Pool {
    /// `None` or 0 uses the machine's parallelism.
    pub fn new(jobs: Option<usize>) -> Self {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.unwrap_or(0))
            .build()
            .expect("thread pool");
        Pool { pool }
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl Executor for Pool {
    fn map<T, F>(&self, count: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        self.pool.install(|| (0..count).into_par_iter().map(job).collect())
    }
}
