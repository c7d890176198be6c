use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Inverse of the zero element was requested.
    #[error("division by zero")]
    DivisionByZero,

    #[error("amplitudes are not normalized (squared norm {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not unitary (residual {residual:e})")]
    NotUnitary { residual: f64 },

    #[error("matrix is not Hermitian (residual {residual:e})")]
    NonHermitian { residual: f64 },

    #[error("non-finite value in input")]
    NonFinite,

    #[error("invalid time grid: {0}")]
    InvalidGrid(String),

    #[error("parse error: {0}")]
    Parse(String),
}
