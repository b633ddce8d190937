use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand dimensions are incompatible.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A matrix expected to be Hermitian is not, within tolerance.
    #[error("matrix is not Hermitian (max asymmetry {0:.3e})")]
    NotHermitian(f64),

    /// A value or parameter lies outside its admissible domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A probability vector fails nonnegativity or normalization.
    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    /// State amplitudes fail normalization.
    #[error("state is not normalized (|norm^2 - 1| = {0:.3e})")]
    NotNormalized(f64),

    /// A density matrix fails Hermiticity, unit trace, or positivity.
    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    /// An exhaustive discrete search would exceed the configured budget.
    #[error("search space too large: {0}")]
    SearchTooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
