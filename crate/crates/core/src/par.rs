// Copyright 2026 The cpk authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! Data-parallel evaluation over independent grid points.
//!
//! With the `parallel` feature (default) work is spread over the rayon
//! global pool; without it everything runs on the calling thread. Each item
//! is computed by the same serial code either way, so results are
//! bit-identical regardless of thread count.

use crate::error::{CpkError, Result};

/// Environment variable holding the worker count.
pub const THREADS_ENV: &str = "CPK_THREADS";

/// Applies `f` to every item, preserving order.
pub fn map_indexed<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
    }
}

/// Serial counterpart of [`map_indexed`], always on the calling thread.
pub fn map_indexed_serial<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(usize, &T) -> R,
{
    items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
}

/// Parses a thread-count string; must be a positive integer.
pub fn parse_threads(raw: &str) -> Result<usize> {
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(CpkError::Config(format!(
            "{THREADS_ENV} must be a positive integer, got {raw:?}"
        ))),
    }
}

/// Sizes the global pool from `CPK_THREADS` when set. Returns the requested
/// count, or `None` when the variable is absent. Calling it again after the
/// pool exists is harmless.
pub fn configure_threads() -> Result<Option<usize>> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(None);
    };
    let n = parse_threads(&raw)?;
    #[cfg(feature = "parallel")]
    {
        // A second initialization fails; the pool built first stays in use.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    Ok(Some(n))
}

/// Worker threads available to [`map_indexed`].
pub fn current_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}
