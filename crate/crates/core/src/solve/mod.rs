//! Exact solvers for domination and packing invariants.
//!
//! Domination-type numbers are minimum set covers; packing-type numbers are
//! independence numbers of auxiliary graphs. Every solver returns a witness
//! and is checked against the subset-enumeration oracle in [`brute`].

use std::time::{Duration, Instant};

use crate::bitset::VertexSet;
use crate::error::SolveError;

pub mod brute;
mod cover;
mod invariants;
mod mis;
mod partition;
mod report;
pub mod validate;

pub use cover::{greedy_set_cover, min_set_cover, CoverSolution};
pub use invariants::{
    domination_number, open_packing_number, packing_number, total_domination_number,
    two_packing_number, undirected_domination_number, undirected_open_packing_number,
};
pub use mis::{all_maximum_independent_sets, max_independent_set};
pub use partition::partition_two_dominating_sets;
pub use report::{compute_invariants, InvariantReport, Outcome};

/// Per-invariant solver limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    /// Wall-clock budget for one solve; `None` means unbounded.
    pub timeout: Option<Duration>,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            timeout: Some(Duration::from_secs(60)),
        }
    }
}

impl SolveConfig {
    pub fn unbounded() -> Self {
        SolveConfig { timeout: None }
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        SolveConfig { timeout: Some(timeout) }
    }
}

/// Cooperative deadline polled from inside search loops.
pub(crate) struct Deadline {
    at: Option<Instant>,
    what: &'static str,
    ticks: u32,
}

impl Deadline {
    pub(crate) fn start(cfg: &SolveConfig, what: &'static str) -> Self {
        Deadline {
            at: cfg.timeout.map(|t| Instant::now() + t),
            what,
            ticks: 0,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SolveError> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks & 0x3ff == 0 {
            if let Some(at) = self.at {
                if Instant::now() >= at {
                    return Err(SolveError::Timeout(self.what));
                }
            }
        }
        Ok(())
    }
}

/// An optimum value together with a set attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnessed {
    pub value: usize,
    pub witness: VertexSet,
}

impl Witnessed {
    pub(crate) fn from_set(witness: VertexSet) -> Self {
        Witnessed {
            value: witness.len(),
            witness,
        }
    }
}
