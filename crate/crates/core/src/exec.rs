//! Pluggable execution of independent jobs.

use alloc::vec::Vec;

/// Runs `count` independent jobs and returns their results in job order.
///
/// Implementations may run jobs concurrently; callers reduce the returned
/// vector sequentially, so outputs do not depend on the schedule.
pub trait Executor: Sync {
    fn map<T, F>(&self, count: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send;
}

/// Runs jobs one after another on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map<T, F>(&self, count: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        (0..count).map(job).collect()
    }
}
