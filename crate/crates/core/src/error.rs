use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong inside the toolkit.
///
/// Scale-limit and inconsistency errors are deliberately separate from input
/// errors: the CLI maps them to different exit codes.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a bijection of 0..{degree}: {detail}")]
    NotBijection { degree: usize, detail: String },

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("scale limit: {what} has {size} elements, cap is {cap}")]
    ScaleLimit {
        what: &'static str,
        size: u64,
        cap: u64,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("inconsistency: {0}")]
    Inconsistency(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown group family or name: {0}")]
    UnknownFamily(String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }
}
