use thiserror::Error;

/// Errors across the library, grouped by how callers should react:
/// bad input, structurally infeasible input (a bridge), blown resource
/// budget, or a violated internal guarantee.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop edge at vertex {0} is not allowed")]
    LoopEdge(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has a bridge {u}-{v}; no strong orientation exists")]
    Bridge { u: usize, v: usize },

    #[error("digraph is not strongly connected")]
    NotStronglyConnected,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    InvalidInput(String),

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("internal contract violation: {0}")]
    ContractViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }
}
