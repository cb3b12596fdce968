use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("field of order {p}^{degree} exceeds the size bound 2^{max_log2}")]
    FieldTooLarge { p: u64, degree: u32, max_log2: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("lemma precondition failed: {0}")]
    LemmaPrecondition(String),

    #[error("enumeration needs {needed} tuples, budget is {limit}")]
    BudgetExceeded { needed: u128, limit: u128 },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
