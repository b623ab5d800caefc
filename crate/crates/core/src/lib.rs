//! Simulation of a two-qubit state-preparation protocol and the correlation
//! statistics of its outputs.
//!
//! Alice holds a two-qubit Werner state and shares a pure entangled channel
//! with Bob. She measures her pair jointly with her half of the channel in a
//! fixed orthonormal basis; each outcome leaves Bob's two qubits in a
//! conditional state. The crate computes, per outcome and averaged over
//! outcomes, the quantum discord and the teleportation-fidelity bounds of
//! those states, sweeps the Werner parameter, and locates the crossover
//! points where Bob's averages meet Alice's curves.
//!
//! Modules follow the pipeline:
//!
//! * [`linalg`] — dense complex matrices, Kronecker products, partial
//!   trace/transpose, a Jacobi eigensolver, trace norm.
//! * [`states`] — Werner states, the three shared channels, classically
//!   correlated fixtures, density-matrix validation.
//! * [`correlations`] — entropies, mutual information, and quantum discord
//!   via a grid-seeded simplex minimizer plus an exhaustive-grid oracle.
//! * [`entanglement`] — concurrence, negativity, fidelity bounds.
//! * [`protocol`] — total-state assembly, Alice's measurement, conditional
//!   Bob states, outcome-averaged sweeps, and crossover search.
//!
//! All numerics are generic over the real scalar via [`Scalar`]; the `*64`
//! aliases below fix `f64`, the precision the documented tolerances assume.
//!
//! Conventions: qubit 0 is the most significant bit of a basis index
//! (big-endian), and all entropies use base-2 logarithms.
//!
//! ```
//! use qdiscord::{channel, quantum_discord, sweep, werner, ChannelKind, ProtocolOptions};
//!
//! let rho = werner::<f64>(0.5).unwrap();
//! let discord = quantum_discord(&rho, 1).unwrap();
//! assert!((discord.value - 0.2625).abs() < 1e-3);
//!
//! let ch = channel::<f64>(ChannelKind::W3);
//! let rows = sweep(&ch, 0.0, 1.0, 3, &ProtocolOptions::default()).unwrap();
//! assert_eq!(rows.len(), 3);
//! ```

// Validation sites use `!(x <= tol)` so that NaN inputs fail the check;
// the suggested positive comparison would silently accept them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod correlations;
pub mod entanglement;
mod error;
pub mod linalg;
pub mod protocol;
mod scalar;
pub mod states;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use correlations::{
    brute_force_discord, classical_correlation, conditional_entropy_measured, mutual_information,
    quantum_discord, quantum_discord_with, von_neumann_entropy, DiscordOptions, DiscordResult,
    MeasurementDirection,
};
pub use entanglement::{concurrence, fidelity_bounds, negativity, FidelityBounds};
pub use linalg::{
    hermitian_eigen, hermitian_eigenvalues, kron, partial_trace, partial_transpose, trace_norm,
    ComplexMatrix, HermitianEigen, StateVector,
};
pub use protocol::{
    average_discord, average_fidelity_bounds, conditional_bob_state, find_crossover,
    measurement_basis, outcomes, sweep, total_state, BasisKind, CurveSelector, MeasuredQubitRule,
    MeasurementBasis, OutcomeRecord, ProtocolOptions, SweepRow,
};
pub use states::{
    bell_state, channel, classically_correlated, validate, werner, werner_bell, BellKind,
    ChannelKind, ChannelSpec, DensityMatrix, QubitBasis, ValidationReport,
};

/// Complex number over `f64`.
pub type Complex64 = num_complex::Complex<f64>;
/// Complex number over `f32`.
pub type Complex32 = num_complex::Complex<f32>;

/// `f64` concrete types — the intended production precision.
pub type Matrix64 = ComplexMatrix<f64>;
pub type StateVector64 = StateVector<f64>;
pub type DensityMatrix64 = DensityMatrix<f64>;
pub type ChannelSpec64 = ChannelSpec<f64>;
pub type SweepRow64 = SweepRow<f64>;

/// `f32` concrete types, for exploratory use at loose tolerances.
pub type Matrix32 = ComplexMatrix<f32>;
pub type StateVector32 = StateVector<f32>;
pub type DensityMatrix32 = DensityMatrix<f32>;
