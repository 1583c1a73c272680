use thiserror::Error;

/// Errors for operations whose inputs are structurally unusable, as opposed to
/// graphs that merely fail a property under test. Property failures are
/// reported through witness-carrying result types, not through this enum.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("common neighbors of vertex {vertex} with itself are not defined")]
    IdenticalVertices { vertex: usize },

    #[error("invalid partition: {reason}")]
    InvalidPartition { reason: String },

    #[error("unknown graph family '{name}'")]
    UnknownFamily { name: String },

    #[error("invalid parameters for family '{family}': {reason}")]
    InvalidFamilyParams { family: String, reason: String },

    #[error("no {k}-regular graph on {n} vertices exists: n*k must be even")]
    DegreeParity { n: usize, k: usize },

    #[error("vertex count {n} exceeds the exhaustive-search cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },

    #[error("{op}: {reason}")]
    PreconditionFailed { op: &'static str, reason: String },

    #[error("infeasible strongly regular parameter set ({n},{k},{a},{c}): {reason}")]
    InfeasibleSrgParameters {
        n: usize,
        k: usize,
        a: usize,
        c: usize,
        reason: String,
    },
}

impl Error {
    pub(crate) fn precondition(op: &'static str, reason: impl Into<String>) -> Self {
        Error::PreconditionFailed {
            op,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
