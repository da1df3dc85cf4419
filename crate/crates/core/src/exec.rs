//! Execution policy for the data-parallel loops.
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] fans work out over
//! rayon; without it every call runs sequentially. Results always come back in
//! input order so reports do not depend on scheduling.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Default brute-force cap on candidate maps.
pub const DEFAULT_MAX_CANDIDATES: u64 = 10_000_000;
/// Default cap on `|G|` for automorphism search.
pub const DEFAULT_MAX_AUT_ORDER: usize = 64;
/// Environment variable overriding [`DEFAULT_MAX_CANDIDATES`].
pub const MAX_BRUTE_ENV: &str = "COCYCLE_MAX_BRUTE";

/// Knobs shared by every enumerating operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub exec: Exec,
    pub max_candidates: u64,
    pub max_aut_order: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            exec: Exec::default(),
            max_candidates: DEFAULT_MAX_CANDIDATES,
            max_aut_order: DEFAULT_MAX_AUT_ORDER,
        }
    }
}

impl Settings {
    pub fn sequential() -> Self {
        Settings { exec: Exec::Sequential, ..Self::default() }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    /// Defaults, with `COCYCLE_MAX_BRUTE` applied when set.
    pub fn from_env() -> Result<Self> {
        let mut s = Self::default();
        if let Ok(raw) = std::env::var(MAX_BRUTE_ENV) {
            s.max_candidates = raw
                .trim()
                .parse()
                .map_err(|_| Error::Format(format!("{MAX_BRUTE_ENV}={raw:?} is not an integer")))?;
        }
        Ok(s)
    }

    pub(crate) fn check_budget(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.max_candidates as u128 {
            return Err(Error::SizeLimitExceeded { what, needed, limit: self.max_candidates as u128 });
        }
        Ok(())
    }
}

/// Order-preserving map.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Order-preserving map over `0..n`.
pub fn map_range<R, F>(exec: Exec, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}

/// Fallible order-preserving map; the first error in input order wins.
pub fn try_map<T, R, F>(exec: Exec, items: &[T], f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    map(exec, items, f).into_iter().collect()
}

/// Walks the cartesian product of `candidates` (one list per slot) and keeps
/// whatever `accept` returns. Work is split over the first slot's choices;
/// output order follows the product order.
pub fn search_product<R, F>(exec: Exec, candidates: &[Vec<usize>], accept: F) -> Vec<R>
where
    R: Send,
    F: Fn(&[usize]) -> Option<R> + Sync + Send,
{
    if candidates.is_empty() {
        return accept(&[]).into_iter().collect();
    }
    if candidates.iter().any(|c| c.is_empty()) {
        return Vec::new();
    }
    let k = candidates.len();
    let per_first = map(exec, &candidates[0], |&first| {
        let mut found = Vec::new();
        let mut choice = vec![0usize; k];
        let mut tuple = vec![first; k];
        loop {
            for i in 1..k {
                tuple[i] = candidates[i][choice[i]];
            }
            if let Some(r) = accept(&tuple) {
                found.push(r);
            }
            let mut i = k;
            loop {
                if i == 1 {
                    return found;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < candidates[i].len() {
                    break;
                }
                choice[i] = 0;
            }
        }
    });
    per_first.into_iter().flatten().collect()
}
