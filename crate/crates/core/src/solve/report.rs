use std::time::Instant;

use serde::Serialize;

use crate::error::SolveError;
use crate::graph::Digraph;

use super::invariants::{domination_number, open_packing_number, packing_number, total_domination_number};
use super::validate;
use super::{SolveConfig, Witnessed};

/// One invariant's result as it appears in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Solved {
        value: usize,
        witness: Vec<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Timeout {
        timeout: bool,
    },
}

impl Outcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            Outcome::Solved { value, .. } => Some(*value),
            Outcome::Timeout { .. } => None,
        }
    }

    fn from_witness(d: &Digraph, w: Witnessed) -> Self {
        Outcome::Solved {
            value: w.value,
            witness: w.witness.to_vec(),
            labels: d.labels().map(|_| w.witness.iter().map(|v| d.label(v)).collect()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Timings {
    pub gamma: u64,
    pub gamma_t: u64,
    pub rho: u64,
    pub rho_open: u64,
}

/// γ, γ_t, ρ and ρ° of one digraph with witnesses.
///
/// `gamma_t` is `None` when δ⁻(D) = 0, and serializes as `null`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub id: String,
    pub n: usize,
    pub arcs: usize,
    pub gamma: Outcome,
    pub gamma_t: Option<Outcome>,
    pub rho: Outcome,
    pub rho_open: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<Timings>,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_millis() as u64)
}

fn settle(
    d: &Digraph,
    res: Result<Witnessed, SolveError>,
    valid: fn(&Digraph, &crate::bitset::VertexSet) -> bool,
) -> Outcome {
    match res {
        Ok(w) => {
            assert!(valid(d, &w.witness), "solver returned an invalid witness");
            Outcome::from_witness(d, w)
        }
        Err(_) => Outcome::Timeout { timeout: true },
    }
}

/// Solve all four digraph invariants. A timeout affects only the invariant
/// that hit it. With `timing` off the report carries no wall-clock data and is
/// byte-stable across runs.
pub fn compute_invariants(id: &str, d: &Digraph, cfg: &SolveConfig, timing: bool) -> InvariantReport {
    let (gamma, t_gamma) = timed(|| settle(d, domination_number(d, cfg), validate::is_dominating));
    let (gamma_t, t_gamma_t) = timed(|| match total_domination_number(d, cfg) {
        Ok(None) => None,
        Ok(Some(w)) => Some(settle(d, Ok(w), validate::is_total_dominating)),
        Err(e) => Some(settle(d, Err(e), validate::is_total_dominating)),
    });
    let (rho, t_rho) = timed(|| settle(d, packing_number(d, cfg), validate::is_packing));
    let (rho_open, t_rho_open) = timed(|| settle(d, open_packing_number(d, cfg), validate::is_open_packing));
    InvariantReport {
        id: id.to_string(),
        n: d.order(),
        arcs: d.arc_count(),
        gamma,
        gamma_t,
        rho,
        rho_open,
        elapsed_ms: timing.then_some(Timings {
            gamma: t_gamma,
            gamma_t: t_gamma_t,
            rho: t_rho,
            rho_open: t_rho_open,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_digraph;

    #[test]
    fn report_for_single_arc() {
        let d = build_digraph(2, [(0, 1)]).unwrap();
        let r = compute_invariants("arc", &d, &SolveConfig::default(), false);
        assert_eq!(r.gamma.value(), Some(1));
        assert_eq!(r.gamma_t, None);
        assert_eq!(r.rho.value(), Some(1));
        assert_eq!(r.rho_open.value(), Some(2));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"id":"arc","n":2,"arcs":1,"gamma":{"value":1,"witness":[0]},"gamma_t":null,"rho":{"value":1,"witness":[0]},"rho_open":{"value":2,"witness":[0,1]}}"#
        );
    }

    #[test]
    fn zero_timeout_is_reported_not_approximated() {
        let d = build_digraph(40, (0..40).map(|i| (i, (i + 1) % 40)).chain((0..40).map(|i| (i, (i + 7) % 40))))
            .unwrap();
        let r = compute_invariants("c40", &d, &SolveConfig::with_timeout(std::time::Duration::ZERO), true);
        assert!(r.elapsed_ms.is_some());
        for o in [&r.gamma, &r.rho] {
            if o.value().is_none() {
                assert_eq!(serde_json::to_string(o).unwrap(), r#"{"timeout":true}"#);
            }
        }
    }
}
