//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by matrix kernels, state constructors, and the protocol.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Incompatible or unrepresentable matrix/register dimensions.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// A qubit or element index is out of range or malformed.
    #[error("index error: {0}")]
    Index(String),

    /// A numeric argument is outside its documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input violated a Hermiticity precondition.
    #[error("not Hermitian: max |m - m†| = {residual:.3e} exceeds {tolerance:.3e}")]
    NotHermitian { residual: f64, tolerance: f64 },

    /// A matrix failed the density-matrix invariants.
    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    /// The Jacobi eigensolver did not reach its off-diagonal tolerance.
    #[error("eigensolver did not converge: off-diagonal norm {off:.3e} after {sweeps} sweeps")]
    NoConvergence { off: f64, sweeps: usize },

    /// A root bracket does not contain a sign change.
    #[error("bracket error: {0}")]
    Bracket(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
