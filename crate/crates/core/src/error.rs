use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("{u}-{v} is not an edge")]
    MissingEdge { u: Vertex, v: Vertex },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: Vertex, v: Vertex },
    #[error("graphs must have at least one vertex")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{what}: size {actual} exceeds the limit of {limit}")]
    TooLarge { what: &'static str, actual: usize, limit: usize },
    #[error("pattern has maximum degree {max_degree}, at most 3 is required")]
    PatternDegreeTooHigh { max_degree: usize },
    #[error("chromatic number {actual} is below the required {required}")]
    ChromaticTooLow { required: usize, actual: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;
