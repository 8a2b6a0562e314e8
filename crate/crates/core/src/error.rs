use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex set is not convex: path {path:?} leaves it")]
    NotConvex { path: Vec<usize> },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("search too large: {0}")]
    SearchTooLarge(String),
    #[error("zero module has no presentation")]
    ZeroModule,
    #[error("decomposition uncertified: {0}")]
    Uncertified(String),
    #[error("not a descent direction: summand {0} lies in Fac of the rest")]
    NotDescent(usize),
    #[error("cap exceeded after {0} nodes")]
    CapExceeded(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
