use thiserror::Error;

use crate::graph::Claw;

/// Errors shared by the graph, algebra and pipeline layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph has an induced claw: center {}, leaves {}, {}, {}",
            .0.center, .0.leaves[0], .0.leaves[1], .0.leaves[2])]
    ClawFound(Claw),

    #[error("distance to the empty vertex set is undefined")]
    EmptySource,

    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("negative weight {weight} on edge {edge}")]
    NegativeWeight { edge: usize, weight: i64 },

    #[error("not a matching: edges {first} and {second} share vertex {vertex}")]
    NotAMatching {
        first: usize,
        second: usize,
        vertex: usize,
    },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid bipartite core: {0}")]
    InvalidCore(String),

    #[error("vertices {u} and {v} must be distinct and non-adjacent")]
    EndpointsNotUsable { u: usize, v: usize },

    #[error("index {index} out of range for {what} of size {size}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },

    #[error("ground set of size {size} exceeds the exhaustive-search cap {cap}")]
    GroundSetTooLarge { size: usize, cap: usize },

    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
