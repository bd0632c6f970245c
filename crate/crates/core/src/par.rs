//! Shard-level fan-out. With the `parallel` feature the work runs on the
//! rayon pool; without it [`Execution::Parallel`] quietly runs sequentially.
//! Results are always combined in shard order, so both modes agree exactly.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when this build can actually run shards concurrently.
    pub fn is_concurrent(self) -> bool {
        self == Execution::Parallel && cfg!(feature = "parallel")
    }
}

/// Maps every item, keeping input order.
pub fn map_collect<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// `shards` independent jobs folded left to right.
pub fn map_reduce<T, F, R>(exec: Execution, shards: usize, map: F, reduce: R) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
    R: Fn(T, T) -> T,
{
    let idx: Vec<usize> = (0..shards).collect();
    map_collect(exec, &idx, |&s| map(s)).into_iter().reduce(reduce)
}
