use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("oscillator parameters must be positive integers, got m = {m}, n = {n}")]
    InvalidParams { m: u32, n: u32 },
    #[error("operator can only act on position polynomials, found momentum in {0}")]
    NotPositionPolynomial(String),
    #[error("action data is not produced by a differential operator with hbar-polynomial coefficients")]
    InconsistentAction,
}

pub type Result<T> = std::result::Result<T, CoreError>;
