//! Execution policy for data-parallel inner loops.
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] dispatches to
//! rayon; without it every policy runs sequentially. Results never depend on
//! the policy: parallel maps preserve input order and all merges are sums of
//! exact integers.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

/// Inputs smaller than this are always mapped sequentially.
#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 64;

impl Exec {
    /// `true` if this policy will actually use worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Order-preserving map.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() && items.len() >= PAR_THRESHOLD {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Order-preserving map that ignores the size threshold; used for coarse
    /// work items such as whole verification specs.
    pub fn map_coarse<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }
}
