//! Execution strategy for the data-parallel inner loops.
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] runs on the rayon
//! global pool. Without it, both variants run sequentially. Results are
//! always produced in index order, so output never depends on scheduling.

use std::env;

/// Default cap on the number of variables of a blowup-polynomial (2^k table).
pub const DEFAULT_MAX_POLY_K: usize = 24;
/// Default cap on the vertex count for superset enumeration in `matroid_prime`.
pub const DEFAULT_MAX_MATROID_K: usize = 12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether work will actually fan out to worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Capacity caps and execution strategy shared by the heavier operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub exec: Exec,
    pub max_poly_k: usize,
    pub max_matroid_k: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            exec: Exec::default(),
            max_poly_k: DEFAULT_MAX_POLY_K,
            max_matroid_k: DEFAULT_MAX_MATROID_K,
        }
    }
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            exec: Exec::Sequential,
            ..Config::default()
        }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    /// Reads `BLOWUP_MAX_K`, which overrides both capacity caps.
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        if let Some(cap) = env::var("BLOWUP_MAX_K")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            cfg.max_poly_k = cap;
            cfg.max_matroid_k = cap;
        }
        cfg
    }
}

/// `(0..n).map(f).collect()`, fanned out when `exec` allows it.
pub fn map_indices<T, F>(exec: Exec, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// Maps every item of a slice, preserving order.
pub fn map_slice<S, T, F>(exec: Exec, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// First `Some` in index order, i.e. `(0..n).find_map(f)`.
pub fn find_map_first<T, F>(exec: Exec, n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().find_map_first(f);
    }
    let _ = exec;
    (0..n).find_map(f)
}
