use thiserror::Error;

/// Errors shared across the whole library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graphs need at least one vertex")]
    EmptyGraph,
    #[error("graphs are capped at {max} vertices, requested {requested}")]
    TooManyVertices { requested: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loops are not allowed on vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("cannot delete the last remaining vertex")]
    LastVertex,
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for `{family}`: {reason}")]
    BadParams { family: String, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("input has {n} vertices which exceeds the guardrail of {limit} (override to proceed)")]
    Guardrail { n: usize, limit: usize },
    #[error("construction would have {vertices} vertices, above the 32-vertex cap")]
    SizeOverflow { vertices: usize },
    #[error("denominator would be zero: {0}")]
    ZeroDenominator(String),
    #[error("fan hypothesis violated: {0}")]
    FanHypothesis(String),
    #[error("cannot contract a self-loop")]
    LoopContraction,
    #[error("multigraph edge {0}-{1} has multiplicity zero")]
    MissingMultiEdge(usize, usize),
    #[error("vertex {0} has no loop to remove")]
    MissingLoop(usize),
}
