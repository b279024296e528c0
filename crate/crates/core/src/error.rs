use thiserror::Error;

/// Failures raised while building, parsing or querying posets and mappings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: element `{token}` is not declared")]
    UndeclaredElement { line: usize, token: String },

    #[error("line {line}: element `{token}` declared twice")]
    DuplicateElement { line: usize, token: String },

    #[error("order relation contains a cycle through `{token}`")]
    Cycle { token: String },

    #[error("element index {index} out of range for a poset of size {size}")]
    UnknownIndex { index: usize, size: usize },

    #[error("unknown element `{token}`")]
    UnknownToken { token: String },

    #[error("line {line}: element `{token}` mapped twice")]
    DuplicateMapping { line: usize, token: String },

    #[error("{what} refused: size {size} exceeds guard {limit}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("mapping is not a witness: chain {chain:?} has no realization")]
    NotAWitness { chain: Vec<String> },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
