//! Deterministic random-input generators shared by the property suites.

#![allow(dead_code)]

use num_complex::Complex;
use qdiscord::{DensityMatrix64, Matrix64, QubitBasis, StateVector64};

/// SplitMix64: tiny, seedable, and identical on every platform.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Standard normal via Box-Muller.
    pub fn gaussian(&mut self) -> f64 {
        let u1 = self.uniform().max(1e-300);
        let u2 = self.uniform();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }

    pub fn complex_gaussian(&mut self) -> Complex<f64> {
        Complex::new(self.gaussian(), self.gaussian())
    }
}

/// Random matrix with i.i.d. complex Gaussian entries.
pub fn ginibre(rng: &mut Rng, dim: usize) -> Matrix64 {
    Matrix64::from_fn(dim, |_, _| rng.complex_gaussian())
}

/// Random mixed state `G G† / Tr(G G†)`.
pub fn random_density_matrix(rng: &mut Rng, num_qubits: usize) -> DensityMatrix64 {
    let dim = 1 << num_qubits;
    let g = ginibre(rng, dim);
    let m = g.matmul(&g.adjoint());
    let trace = m.trace().re;
    DensityMatrix64::new(m.scale_re(1.0 / trace), num_qubits).expect("Ginibre state is physical")
}

/// Haar-ish random pure state (normalized Gaussian vector).
pub fn random_pure_state(rng: &mut Rng, dim: usize) -> StateVector64 {
    StateVector64::normalized((0..dim).map(|_| rng.complex_gaussian()).collect())
        .expect("Gaussian vector is almost surely nonzero")
}

/// Random 2x2 unitary from four angles.
pub fn random_su2(rng: &mut Rng) -> Matrix64 {
    let theta = rng.uniform() * std::f64::consts::FRAC_PI_2;
    let (a, b, g) = (
        rng.uniform() * std::f64::consts::TAU,
        rng.uniform() * std::f64::consts::TAU,
        rng.uniform() * std::f64::consts::TAU,
    );
    let (sin_t, cos_t) = theta.sin_cos();
    let mut u = Matrix64::zeros(2);
    u[(0, 0)] = Complex::from_polar(cos_t, a);
    u[(0, 1)] = Complex::from_polar(sin_t, b);
    u[(1, 0)] = -Complex::from_polar(sin_t, g - b);
    u[(1, 1)] = Complex::from_polar(cos_t, g - a);
    u
}

/// `u ρ u†` wrapped back into a density matrix.
pub fn conjugate_state(rho: &DensityMatrix64, u: &Matrix64) -> DensityMatrix64 {
    let m = u.matmul(rho.matrix()).matmul(&u.adjoint());
    DensityMatrix64::new(m, rho.num_qubits()).expect("unitary conjugation preserves physicality")
}

/// Random single-qubit orthonormal basis (columns of a random unitary).
pub fn random_qubit_basis(rng: &mut Rng) -> QubitBasis<f64> {
    let u = random_su2(rng);
    let v0 = StateVector64::new(vec![u[(0, 0)], u[(1, 0)]]).expect("unitary column");
    let v1 = StateVector64::new(vec![u[(0, 1)], u[(1, 1)]]).expect("unitary column");
    QubitBasis::new(v0, v1).expect("unitary columns are orthonormal")
}

/// Random separable two-qubit state: a mixture of random product states.
pub fn random_separable(rng: &mut Rng, terms: usize) -> DensityMatrix64 {
    let mut weights: Vec<f64> = (0..terms).map(|_| rng.uniform() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let mut m = Matrix64::zeros(4);
    for w in weights {
        let a = random_density_matrix(rng, 1);
        let b = random_density_matrix(rng, 1);
        let prod = qdiscord::kron(a.matrix(), b.matrix()).expect("2x2 kron");
        m = &m + &prod.scale_re(w);
    }
    DensityMatrix64::new(m, 2).expect("mixture of products is physical")
}
