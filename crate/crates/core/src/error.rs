use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    MalformedPerm(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group of order {order} exceeds the enumeration limit {limit}")]
    EnumerationLimit { order: u128, limit: u128 },
    #[error("element is not contained in the group")]
    NotInGroup,
    #[error("subgroup is not contained in the ambient group")]
    NotSubgroup,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("element is not a {0}-element")]
    NotPElement(u64),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0} is not a unit modulo {1}")]
    NotUnit(u64, u64),
    #[error("zero has no p-part")]
    ZeroValue,
    #[error("value is not {0}-integral")]
    NotIntegral(u64),
    #[error("table verification failed: {0}")]
    Verification(String),
    #[error("character table computation failed: {0}")]
    TableFailure(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inadmissible parameter: {0}")]
    Inadmissible(String),
    #[error("inconsistent inputs: {0}")]
    Inconsistent(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
