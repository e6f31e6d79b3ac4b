use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex set is not independent: {0} ~ {1}")]
    NotIndependent(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("biconvex witness rejected")]
    WitnessRejected,

    #[error("instance too large: {what} is {size}, limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("malformed decomposition tree: {0}")]
    MalformedTree(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
