use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph is disconnected; metric dimensions are only defined for connected graphs")]
    Disconnected,

    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Two independent computations disagreed. Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
