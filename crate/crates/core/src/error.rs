use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Operand dimensions are incompatible.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// An input violates a documented numerical precondition
    /// (Hermiticity, unitarity, unit norm, ...).
    #[error("contract violation: {0}")]
    Contract(String),
    /// A parameter is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The requested register exceeds the dense-matrix resource cap.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Measurement data do not determine the state.
    #[error("under-determined: {0}")]
    Underdetermined(String),
}

pub type Result<T> = std::result::Result<T, Error>;
