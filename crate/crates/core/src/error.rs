//! Error types shared across the workbench.

use thiserror::Error;

/// Errors from the exact arithmetic foundations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("mismatched field descriptors")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bad modulus: {0}")]
    BadModulus(String),
    #[error("zero polynomial input")]
    ZeroPolynomial,
}

/// Errors from valued-field construction and valuation machinery.
#[derive(Debug, Error)]
pub enum FieldError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    /// Truncation hides the data needed to certify a result.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("valuation is not exact: {0}")]
    NotExact(String),
    #[error("division by an element not certified nonzero")]
    ZeroDivision,
    #[error("extension polynomial is reducible: root {0} found in parent")]
    Reducible(String),
    #[error("unsupported extension shape: {0}")]
    UnsupportedShape(String),
    #[error("general extensions capped at degree {cap}, got {got}")]
    DegreeCap { cap: usize, got: usize },
    #[error("gap sequence violates the growth constraint at index {0}")]
    GapConstraint(usize),
    #[error("gap sequence too short for requested precision {0}")]
    InsufficientGaps(String),
    #[error("element does not generate the extension")]
    NonGenerating,
    #[error("no pivot with exact valuation in column {0}")]
    PivotNotExact(usize),
    #[error("inconsistent certificates: {0}")]
    InconsistentCertificates(String),
    #[error("mismatched tower: {0}")]
    TowerMismatch(String),
    #[error("linear dependence detected: {0}")]
    Dependence(String),
    #[error("element is not in the expected field: {0}")]
    WrongField(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type FieldResult<T> = Result<T, FieldError>;
