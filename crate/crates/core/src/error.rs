//! Crate-wide error type.
//!
//! All arithmetic is exact, so errors are contract violations (bad input,
//! size mismatches), resource ceilings (enumeration budgets, degree caps),
//! or impossible requests (unrealizable class types, pole evaluations).

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid hessenberg function: {0}")]
    InvalidHessenberg(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("division by zero")]
    DivisionByZero,

    #[error("evaluation at a pole: {0}")]
    Pole(String),

    #[error("expected an integer value, got {0}")]
    NotInteger(String),

    #[error("expected a polynomial value, got {0}")]
    NotPolynomial(String),

    #[error("degree {0} exceeds the configured cap {1}")]
    DegreeCap(usize, usize),

    #[error("similarity class type not realizable over F_{0}: {1}")]
    Unrealizable(u64, String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("field of size {0} exceeds the supported limit")]
    FieldTooLarge(u64),

    #[error("enumeration budget of {0} steps exceeded")]
    BudgetExceeded(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Rough classification used by front ends to pick an exit code:
    /// parse problems, domain violations, or resource ceilings.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_))
    }
}
