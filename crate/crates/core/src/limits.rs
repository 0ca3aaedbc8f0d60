use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Environment variable overriding [`Limits::exact_cap`].
pub const CAP_ENV: &str = "PERFDIV_CAP";
/// Environment variable overriding [`Limits::search_cap`].
pub const SEARCH_CAP_ENV: &str = "PERFDIV_SEARCH_CAP";

/// Vertex-count caps for the exponential procedures.
///
/// `exact_cap` guards the whole-lattice decisions (perfect divisibility,
/// k-divisibility, minimality, chromatic number). `search_cap` guards the
/// single good-partition search and the perfection test, which only walk
/// one subset lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub exact_cap: usize,
    pub search_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exact_cap: 16,
            search_cap: 22,
        }
    }
}

impl Limits {
    /// Defaults, overridden by `PERFDIV_CAP` / `PERFDIV_SEARCH_CAP` when set.
    /// Unparseable values are ignored.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = read_env(CAP_ENV) {
            limits.exact_cap = v;
        }
        if let Some(v) = read_env(SEARCH_CAP_ENV) {
            limits.search_cap = v;
        }
        limits.search_cap = limits.search_cap.max(limits.exact_cap);
        limits
    }

    pub(crate) fn check_exact(&self, n: usize) -> Result<()> {
        check(n, self.exact_cap)
    }

    pub(crate) fn check_search(&self, n: usize) -> Result<()> {
        check(n, self.search_cap)
    }
}

fn check(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

fn read_env(key: &str) -> Option<usize> {
    std::env::var(key)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .map(|v: usize| v.min(crate::graph::MAX_VERTICES))
}
