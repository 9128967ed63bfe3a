//! Claim checkers, the batch suite runner and the acyclic search.
//!
//! Every checker returns a [`VerificationRecord`]; solver timeouts and
//! enumeration caps turn into `timeout` / `inconclusive` verdicts instead of
//! errors, so one hard instance never stops a batch.

mod bounds;
mod checks;
pub mod constructions;
mod suite;

use crate::family::FamilySpec;
use crate::graph::Digraph;
use crate::solve::SolveConfig;

pub use bounds::{product_domination, ProductBounds, ProductGamma};
pub use checks::{
    check_c4_equality, check_closed_helly, check_gm_vizing_failure, check_half_vizing_bound,
    check_isolated_leaf_extension, check_max_packing_dominates, check_meir_moon, check_open_helly,
    check_open_packing_equals_total_domination, check_packing_equals_domination, check_packing_lower_bound,
    check_strong_support_condition, check_total_domination_direct_product, check_vizing_inequality,
    has_strong_support_with_two_non_isolated_leaves, run_acyclic_check,
};
pub use suite::{
    default_suite, run_suite, run_suite_with, search_acyclic_problem, CheckLine, RunOptions, Source, SuiteConfig,
    SuiteError, SuiteSummary, ACYCLIC_EXHAUSTIVE_LIMIT, DEFAULT_SUITE,
};

/// Knobs shared by all checkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub solve: SolveConfig,
    /// Products with more vertices than this are not solved exactly; their
    /// domination number is bracketed by bounds instead.
    pub exact_threshold: usize,
    /// Cap on enumerated maximum packings per factor.
    pub packing_cap: usize,
    /// Cap on enumerated maximal cliques.
    pub clique_cap: usize,
    /// Record wall-clock time; off gives byte-stable output.
    pub timing: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            solve: SolveConfig::default(),
            exact_threshold: 64,
            packing_cap: 100_000,
            clique_cap: crate::auxgraph::DEFAULT_CLIQUE_CAP,
            timing: true,
        }
    }
}

/// A digraph under test together with how to name and reproduce it.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub graph: Digraph,
    /// Present for named family members; enables known dominating sets.
    pub spec: Option<FamilySpec>,
    /// Seed that regenerates a random instance.
    pub seed: Option<u64>,
    /// Embed the arc list in records (for instances with no short name).
    pub inline: bool,
}

impl Instance {
    pub fn from_spec(spec: FamilySpec) -> Result<Self, crate::error::FamilyError> {
        Ok(Instance {
            name: spec.to_string(),
            graph: spec.build()?,
            spec: Some(spec),
            seed: None,
            inline: false,
        })
    }

    pub fn family(spec: &str) -> Result<Self, crate::error::FamilyError> {
        Instance::from_spec(spec.parse()?)
    }

    pub fn inline(name: impl Into<String>, graph: Digraph) -> Self {
        Instance {
            name: name.into(),
            graph,
            spec: None,
            seed: None,
            inline: true,
        }
    }
}
