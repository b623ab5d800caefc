//! Constructors and validators for the quantum states used by the protocol.

use num_complex::Complex;
use num_traits::One;

use crate::linalg::{jacobi_eigen, kron, partial_trace, ComplexMatrix, StateVector};
use crate::{Error, Result, Scalar};

/// Hermiticity residual a density matrix may carry.
pub const DENSITY_HERMITICITY_TOL: f64 = 1e-10;
/// Allowed deviation of the trace from one.
pub const DENSITY_TRACE_TOL: f64 = 1e-10;
/// Most negative eigenvalue a density matrix may carry.
pub const DENSITY_MIN_EIGENVALUE: f64 = -1e-10;
/// Orthonormality tolerance for local measurement bases.
pub const BASIS_ORTHONORMALITY_TOL: f64 = 1e-12;

/// A validated multi-qubit density matrix.
///
/// Construction through [`DensityMatrix::new`] guarantees Hermiticity within
/// [`DENSITY_HERMITICITY_TOL`], unit trace within [`DENSITY_TRACE_TOL`], and a
/// spectrum above [`DENSITY_MIN_EIGENVALUE`].
#[derive(Clone, Debug)]
pub struct DensityMatrix<T> {
    matrix: ComplexMatrix<T>,
    num_qubits: usize,
}

impl<T: Scalar> DensityMatrix<T> {
    /// Validates `matrix` as the state of a `num_qubits` register.
    pub fn new(matrix: ComplexMatrix<T>, num_qubits: usize) -> Result<Self> {
        if num_qubits == 0 || matrix.dim() != 1usize << num_qubits {
            return Err(Error::Dimension(format!(
                "matrix dimension {} does not match a {num_qubits}-qubit register",
                matrix.dim()
            )));
        }
        let report = validate(&matrix);
        if !report.passes() {
            return Err(Error::InvalidState(report.describe()));
        }
        Ok(Self { matrix, num_qubits })
    }

    /// Wraps a matrix that is a density matrix by construction
    /// (e.g. a Kronecker product or marginal of validated states).
    pub(crate) fn new_unchecked(matrix: ComplexMatrix<T>, num_qubits: usize) -> Self {
        debug_assert_eq!(matrix.dim(), 1usize << num_qubits);
        Self { matrix, num_qubits }
    }

    /// `|ψ⟩⟨ψ|` of a normalized pure state.
    pub fn from_pure(psi: &StateVector<T>, num_qubits: usize) -> Result<Self> {
        if psi.dim() != 1usize << num_qubits {
            return Err(Error::Dimension(format!(
                "state dimension {} does not match a {num_qubits}-qubit register",
                psi.dim()
            )));
        }
        Ok(Self::new_unchecked(psi.projector(), num_qubits))
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// Marginal state on the listed qubits (strictly increasing indices).
    pub fn reduced(&self, keep: &[usize]) -> Result<DensityMatrix<T>> {
        let m = partial_trace(&self.matrix, self.num_qubits, keep)?;
        Ok(Self::new_unchecked(m, keep.len()))
    }
}

/// Diagnostic record of the density-matrix invariants for one matrix.
#[derive(Clone, Copy, Debug)]
pub struct ValidationReport<T> {
    pub hermiticity_residual: T,
    pub trace_deviation: T,
    pub min_eigenvalue: T,
}

impl<T: Scalar> ValidationReport<T> {
    /// True iff every invariant holds.
    pub fn passes(&self) -> bool {
        self.hermiticity_residual <= T::tolerance(DENSITY_HERMITICITY_TOL)
            && self.trace_deviation <= T::tolerance(DENSITY_TRACE_TOL)
            && self.min_eigenvalue >= -T::tolerance(-DENSITY_MIN_EIGENVALUE)
    }

    fn describe(&self) -> String {
        format!(
            "hermiticity residual {:.3e}, trace deviation {:.3e}, min eigenvalue {:.3e}",
            self.hermiticity_residual.as_f64(),
            self.trace_deviation.as_f64(),
            self.min_eigenvalue.as_f64()
        )
    }
}

/// Measures how far `matrix` is from being a physical state. Never errors;
/// the spectrum is taken from the symmetrized matrix if the input is skewed.
pub fn validate<T: Scalar>(matrix: &ComplexMatrix<T>) -> ValidationReport<T> {
    let hermiticity_residual = matrix.hermiticity_residual();
    let trace_deviation = (matrix.trace() - Complex::one()).norm();
    let min_eigenvalue = match jacobi_eigen(matrix) {
        Ok(eig) => eig.values[0],
        Err(_) => T::nan(),
    };
    ValidationReport {
        hermiticity_residual,
        trace_deviation,
        min_eigenvalue,
    }
}

/// The four maximally entangled two-qubit basis states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BellKind {
    /// `(|00⟩ + |11⟩)/√2`
    PhiPlus,
    /// `(|00⟩ - |11⟩)/√2`
    PhiMinus,
    /// `(|01⟩ + |10⟩)/√2`
    PsiPlus,
    /// `(|01⟩ - |10⟩)/√2`
    PsiMinus,
}

/// One of the Bell states as a normalized state vector.
pub fn bell_state<T: Scalar>(kind: BellKind) -> StateVector<T> {
    let s = T::FRAC_1_SQRT_2();
    let terms: [(usize, T); 2] = match kind {
        BellKind::PhiPlus => [(0b00, s), (0b11, s)],
        BellKind::PhiMinus => [(0b00, s), (0b11, -s)],
        BellKind::PsiPlus => [(0b01, s), (0b10, s)],
        BellKind::PsiMinus => [(0b01, s), (0b10, -s)],
    };
    StateVector::from_real_terms(4, &terms).expect("normalized by construction")
}

/// The Bell state `(|00⟩ + |11⟩)/√2`.
pub fn bell_phi_plus<T: Scalar>() -> StateVector<T> {
    bell_state(BellKind::PhiPlus)
}

/// Two-qubit Werner state: a Bell projector mixed with isotropic noise,
/// `λ|β⟩⟨β| + (1-λ) I/4` for `λ ∈ [0, 1]`.
///
/// The entangled component is `|ψ⁺⟩ = (|01⟩ + |10⟩)/√2`; this is the
/// convention the channel crossover results are calibrated against. All
/// basis-independent figures of the family (spectrum, partial-transpose
/// spectrum, entropy, discord, concurrence, negativity, fidelity bounds)
/// are identical for every Bell choice; use [`werner_bell`] to pick a
/// different component explicitly.
pub fn werner<T: Scalar>(lambda: T) -> Result<DensityMatrix<T>> {
    werner_bell(lambda, BellKind::PsiPlus)
}

/// Werner state with an explicit choice of the entangled component.
pub fn werner_bell<T: Scalar>(lambda: T, kind: BellKind) -> Result<DensityMatrix<T>> {
    if !(lambda >= T::zero() && lambda <= T::one()) {
        return Err(Error::Domain(format!(
            "Werner parameter {lambda} outside [0, 1]"
        )));
    }
    let bell = bell_state::<T>(kind).projector();
    let noise = ComplexMatrix::identity(4).scale_re((T::one() - lambda) / T::real(4.0));
    let m = &bell.scale_re(lambda) + &noise;
    DensityMatrix::new(m, 2)
}

/// The channels Alice and Bob can share.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    /// Four-qubit cluster state.
    Cluster4,
    /// Four-qubit state with six equal-weight terms.
    Omega4,
    /// Three-qubit W state.
    W3,
}

impl ChannelKind {
    pub fn name(self) -> &'static str {
        match self {
            ChannelKind::Cluster4 => "cluster4",
            ChannelKind::Omega4 => "omega4",
            ChannelKind::W3 => "w3",
        }
    }
}

/// A shared pure channel, split into the qubits Alice measures jointly with
/// her pair and the qubits Bob keeps.
///
/// The register stores Alice's channel qubits first, then Bob's, so a ket
/// like `|01⟩_A|10⟩_B` sits at basis index `0b0110`.
#[derive(Clone, Debug)]
pub struct ChannelSpec<T> {
    pub kind: ChannelKind,
    pub state: StateVector<T>,
    pub alice_channel_qubits: Vec<usize>,
    pub bob_qubits: Vec<usize>,
}

impl<T: Scalar> ChannelSpec<T> {
    pub fn num_qubits(&self) -> usize {
        self.alice_channel_qubits.len() + self.bob_qubits.len()
    }
}

/// Builds one of the three named channels.
pub fn channel<T: Scalar>(kind: ChannelKind) -> ChannelSpec<T> {
    let half = T::real(0.5);
    match kind {
        ChannelKind::Cluster4 => {
            // (|00⟩|00⟩ + |01⟩|10⟩ + |10⟩|01⟩ − |11⟩|11⟩) / 2
            let state = StateVector::from_real_terms(
                16,
                &[
                    (0b0000, half),
                    (0b0110, half),
                    (0b1001, half),
                    (0b1111, -half),
                ],
            )
            .expect("normalized by construction");
            ChannelSpec {
                kind,
                state,
                alice_channel_qubits: vec![0, 1],
                bob_qubits: vec![2, 3],
            }
        }
        ChannelKind::Omega4 => {
            // (|00⟩|11⟩ + |01⟩|01⟩ + |01⟩|10⟩ + |10⟩|01⟩ + |10⟩|10⟩ + |11⟩|00⟩) / √6
            let s6 = T::one() / T::real(6.0).sqrt();
            let state = StateVector::from_real_terms(
                16,
                &[
                    (0b0011, s6),
                    (0b0101, s6),
                    (0b0110, s6),
                    (0b1001, s6),
                    (0b1010, s6),
                    (0b1100, s6),
                ],
            )
            .expect("normalized by construction");
            ChannelSpec {
                kind,
                state,
                alice_channel_qubits: vec![0, 1],
                bob_qubits: vec![2, 3],
            }
        }
        ChannelKind::W3 => {
            // (|0⟩|01⟩ + |0⟩|10⟩ + |1⟩|00⟩) / √3
            let s3 = T::one() / T::real(3.0).sqrt();
            let state = StateVector::from_real_terms(8, &[(0b001, s3), (0b010, s3), (0b100, s3)])
                .expect("normalized by construction");
            ChannelSpec {
                kind,
                state,
                alice_channel_qubits: vec![0],
                bob_qubits: vec![1, 2],
            }
        }
    }
}

/// Orthonormal basis of a single qubit.
#[derive(Clone, Debug)]
pub struct QubitBasis<T> {
    vectors: [StateVector<T>; 2],
}

impl<T: Scalar> QubitBasis<T> {
    /// Checks pairwise orthonormality within [`BASIS_ORTHONORMALITY_TOL`].
    pub fn new(v0: StateVector<T>, v1: StateVector<T>) -> Result<Self> {
        if v0.dim() != 2 || v1.dim() != 2 {
            return Err(Error::Dimension(
                "qubit basis vectors must have dimension 2".into(),
            ));
        }
        let overlap = v0.inner(&v1).norm();
        if !(overlap <= T::tolerance(BASIS_ORTHONORMALITY_TOL)) {
            return Err(Error::Domain(format!(
                "basis vectors are not orthogonal: |⟨v0|v1⟩| = {:.3e}",
                overlap.as_f64()
            )));
        }
        Ok(Self { vectors: [v0, v1] })
    }

    /// `{|0⟩, |1⟩}`.
    pub fn computational() -> Self {
        Self {
            vectors: [
                StateVector::basis_state(2, 0).expect("valid index"),
                StateVector::basis_state(2, 1).expect("valid index"),
            ],
        }
    }

    pub fn vectors(&self) -> &[StateVector<T>; 2] {
        &self.vectors
    }
}

/// Two-qubit state diagonal in a product of local orthonormal bases:
/// `Σ p_ij |i⟩⟨i|_A ⊗ |j⟩⟨j|_B`. These states carry zero discord and serve
/// as test fixtures for the minimizer.
pub fn classically_correlated<T: Scalar>(
    p: &[[T; 2]; 2],
    basis_a: &QubitBasis<T>,
    basis_b: &QubitBasis<T>,
) -> Result<DensityMatrix<T>> {
    let mut sum = T::zero();
    for row in p {
        for &w in row {
            if !(w >= T::zero()) {
                return Err(Error::Domain(format!("probability {w} is negative")));
            }
            sum += w;
        }
    }
    if (sum - T::one()).abs() > T::tolerance(DENSITY_TRACE_TOL) {
        return Err(Error::Domain(format!(
            "probability table sums to {sum}, expected 1"
        )));
    }
    let mut m = ComplexMatrix::zeros(4);
    for (i, row) in p.iter().enumerate() {
        for (j, &w) in row.iter().enumerate() {
            let proj = kron(
                &basis_a.vectors()[i].projector(),
                &basis_b.vectors()[j].projector(),
            )?;
            m = &m + &proj.scale_re(w);
        }
    }
    DensityMatrix::new(m, 2)
}
