use thiserror::Error;

use crate::classes::PatternWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop arc ({0}, {0}) is not allowed")]
    Loop(usize),

    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("vertex sets overlap at vertex {0}")]
    Overlap(usize),

    #[error("component index {index} out of range ({count} components)")]
    ComponentIndex { index: usize, count: usize },

    #[error("input is not in the requested class: {0}")]
    ClassViolation(PatternWitness),

    #[error("input digraph is disconnected")]
    Disconnected,

    /// A structural consequence that must hold for every class member did not.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("not computed: n = {n} exceeds the oracle cap {cap}")]
    NotComputed { n: usize, cap: usize },

    #[error("n = {n} exceeds the exhaustive enumeration cap {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
