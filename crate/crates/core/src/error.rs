use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("group order exceeds bound {bound}")]
    BoundExceeded { bound: usize },
    #[error("permutations have mismatched degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("relation check failed: {0}")]
    RelationFailure(String),
    #[error("unknown group label `{0}`")]
    UnknownLabel(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
