use thiserror::Error;

use crate::graph::MAX_VERTICES;

/// Failures while constructing or reading graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0} (arcs must join distinct vertices)")]
    SelfLoop(usize),
    #[error("arc ({u},{v}) references a vertex outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    Capacity(usize),
    #[error("product factors must be nonempty")]
    EmptyFactor,
    #[error("fiber index {index} out of range 0..{len}")]
    FiberOutOfRange { index: usize, len: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("labels: expected {expected}, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// Failures of exact solvers. A timeout is an outcome distinct from infeasibility.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("{0}: deadline exceeded")]
    Timeout(&'static str),
    #[error("{n} vertices exceeds the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("clique enumeration exceeded the limit of {0} cliques")]
    CliqueLimit(usize),
    #[error("enumeration exceeded the limit of {0} sets")]
    EnumerationLimit(usize),
}

/// Failures while building a named family member.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unrecognised family spec `{0}`")]
    Unknown(String),
    #[error("family spec `{spec}`: {msg}")]
    Invalid { spec: String, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
