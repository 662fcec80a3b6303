use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpannerError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    InvalidVertex { vertex: VertexId, n: usize },

    #[error("edge id {edge} out of range for graph with {m} edges")]
    InvalidEdge { edge: EdgeId, m: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("edge weight must be positive and finite, got {0}")]
    NonPositiveWeight(f64),

    #[error("round {round} is not a matching: vertex {vertex} is covered twice")]
    NotMatching { round: usize, vertex: VertexId },

    #[error("edge {0} of the candidate spanner is not an edge of the host graph")]
    NotSubgraph(EdgeId),

    #[error("base graph girth {measured} does not exceed the required {required}")]
    GirthTooSmall { measured: String, required: usize },

    #[error("budget exceeded: {required} checks required, budget is {budget}")]
    BudgetExceeded { required: u64, budget: u64 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = SpannerError> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> SpannerError {
    SpannerError::InvalidArgument(msg.into())
}
