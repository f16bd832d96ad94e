use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size limit exceeded: n + m = {requested} but the configured bound is {limit}")]
    SizeLimit { requested: usize, limit: usize },

    #[error("composition arity mismatch: left side has {left} circles, right side has {right}")]
    Arity { left: usize, right: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("series undefined at T=0: denominator has zero constant term")]
    UndefinedAtZero,

    #[error("denominator polynomial is zero")]
    ZeroDenominator,

    #[error("genus bookkeeping failed: 2 - chi - b = {0} is negative or odd")]
    GenusParity(i64),

    #[error("validation error at {path}: {message}")]
    Validation { path: String, message: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
