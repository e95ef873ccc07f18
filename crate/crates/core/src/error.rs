use thiserror::Error;

use crate::vertex_set::MAX_ORDER;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graphs are limited to {MAX_ORDER} vertices, got {0}")]
    TooManyVertices(usize),

    #[error("{{{0},{1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("{what} limit exceeded ({actual} > {limit})")]
    CapExceeded { what: &'static str, limit: usize, actual: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("strategy `{strategy}` does not apply: {reason}")]
    StrategyMismatch { strategy: &'static str, reason: String },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn cap(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::CapExceeded { what, limit, actual }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
