//! Resource ceilings shared by the exhaustive routines.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use serde::Serialize;

pub const DEFAULT_MAX_ORDER: usize = 50_000;
pub const DEFAULT_MAX_PERM_N: usize = 9;
pub const DEFAULT_MAX_SUBSET: usize = 8;
pub const DEFAULT_MAX_ENUMERATION: u64 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Budget {
    /// Largest graph a constructor will materialize.
    pub max_order: usize,
    /// Largest degree of a symmetric group that may be enumerated.
    pub max_perm_n: usize,
    /// Largest subset size the brute-force cut search may try.
    pub max_subset_size: usize,
    /// Largest number of subsets an exhaustive check may visit.
    pub max_enumeration: u64,
    /// Ceiling on max-flow invocations in the extra-connectivity engine.
    pub max_flow_calls: Option<u64>,
    /// Wall-clock ceiling in seconds for the extra-connectivity engine.
    pub max_seconds: Option<f64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_order: DEFAULT_MAX_ORDER,
            max_perm_n: DEFAULT_MAX_PERM_N,
            max_subset_size: DEFAULT_MAX_SUBSET,
            max_enumeration: DEFAULT_MAX_ENUMERATION,
            max_flow_calls: None,
            max_seconds: None,
        }
    }
}

/// Tracks flow calls and elapsed time against a [`Budget`]. Shared across threads.
#[derive(Debug)]
pub struct Meter {
    flows: AtomicU64,
    exhausted: AtomicBool,
    start: Instant,
    max_flow_calls: Option<u64>,
    max_seconds: Option<f64>,
}

impl Meter {
    pub fn new(budget: &Budget) -> Self {
        Meter {
            flows: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
            start: Instant::now(),
            max_flow_calls: budget.max_flow_calls,
            max_seconds: budget.max_seconds,
        }
    }

    /// Records one flow call. Returns false once the budget is spent.
    pub fn charge_flow(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let used = self.flows.fetch_add(1, Ordering::Relaxed) + 1;
        let over_calls = self.max_flow_calls.is_some_and(|m| used > m);
        let over_time = self.max_seconds.is_some_and(|s| self.start.elapsed().as_secs_f64() > s);
        if over_calls || over_time {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }

    pub fn flow_calls(&self) -> u64 {
        self.flows.load(Ordering::Relaxed)
    }
}
