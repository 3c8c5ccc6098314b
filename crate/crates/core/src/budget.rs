use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Default node budget for exhaustive searches.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

/// A shared counter of search nodes.
///
/// Every exhaustive enumeration (cliques, induced cycles, geodesics, embeddings) ticks the
/// budget; running out is reported as [`Error::BudgetExceeded`] and never as a verdict.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    #[inline]
    pub fn tick(&self) -> Result<()> {
        self.spend(1)
    }

    pub fn spend(&self, n: u64) -> Result<()> {
        let before = self.used.fetch_add(n, Ordering::Relaxed);
        if before.saturating_add(n) > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed).min(self.limit)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}
