use thiserror::Error;

/// Errors produced by the linear-algebra, state and cloner layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid subsystem selection: {0}")]
    InvalidSubsystem(String),

    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NonHermitian { deviation: f64 },

    #[error("not a valid density matrix: {0}")]
    InvalidState(String),

    #[error("unphysical state: {0}")]
    UnphysicalState(String),

    #[error("machine parameter lambda={lambda} outside [0, {max}]")]
    InvalidLambda { lambda: f64, max: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("amplitude vector is not normalized (norm^2 = {0})")]
    Unnormalized(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
