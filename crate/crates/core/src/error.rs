use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex subset must be nonempty")]
    EmptySubset,
    #[error("graph must be connected")]
    NotConnected,
    #[error("vertex {0} is not a slim vertex")]
    NotSlim(usize),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("invalid threshold: {0}")]
    InvalidThreshold(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
