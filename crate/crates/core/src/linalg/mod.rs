//! Dense complex matrix kernel: products, Kronecker products, partial
//! trace/transpose, Hermitian eigendecomposition, trace norm.
//!
//! Everything here works on square matrices only, sized for multi-qubit
//! registers (dimension a power of two, at most a few dozen). Qubit indices
//! are big-endian: qubit 0 is the most significant bit of a computational
//! basis index.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;
use num_traits::One;

use crate::{Error, Result, Scalar};

mod eigen;

pub(crate) use eigen::jacobi_eigen;
pub use eigen::{
    hermitian_eigen, hermitian_eigenvalues, trace_norm, HermitianEigen, HERMITICITY_TOL,
    JACOBI_OFF_TOL, MAX_JACOBI_SWEEPS,
};

/// Acceptable deviation of a state vector's norm from one.
pub const STATE_NORM_TOL: f64 = 1e-12;

/// Dense square matrix of complex amplitudes, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    /// Zero matrix of the given dimension. Panics if `dim == 0`.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self {
            dim,
            data: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    /// Identity matrix of the given dimension. Panics if `dim == 0`.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::one();
        }
        m
    }

    /// Builds a matrix entry by entry from `f(row, col)`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length equal to the row count.
    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Dimension("matrix must have at least one row".into()));
        }
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension(format!(
                "matrix rows must all have length {dim}"
            )));
        }
        Ok(Self {
            dim,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    /// Entrywise complex conjugate (in the computational basis).
    pub fn conjugate(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(i, j)].conj())
    }

    /// Multiplies every entry by a complex factor.
    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// Multiplies every entry by a real factor.
    pub fn scale_re(&self, factor: T) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z.scale(factor)).collect(),
        }
    }

    /// Matrix product. Panics on dimension mismatch.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix product needs equal dimensions");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.re.is_zero() && a.im.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    /// Matrix-vector product. Panics on dimension mismatch.
    pub fn mul_vec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(
            self.dim,
            v.len(),
            "matrix-vector product needs equal dimensions"
        );
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }

    /// Largest entrywise deviation from the adjoint, `max |m - m†|`.
    pub fn hermiticity_residual(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }

    /// `(m + m†) / 2`, exactly Hermitian.
    pub fn symmetrized(&self) -> Self {
        let half = T::real(0.5);
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = (self[(i, j)] + self[(j, i)].conj()).scale(half);
            }
        }
        out
    }

    /// Largest entrywise modulus of the difference to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim, "comparison needs equal dimensions");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |acc, x| acc + x)
            .sqrt()
    }

    pub(crate) fn offdiag_frobenius(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    acc += self[(i, j)].norm_sqr();
                }
            }
        }
        acc.sqrt()
    }
}

impl<T: Scalar> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.dim + j]
    }
}

impl<T: Scalar> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix sum needs equal dimensions");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(
            self.dim, rhs.dim,
            "matrix difference needs equal dimensions"
        );
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<T: Scalar> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        self.matmul(rhs)
    }
}

/// Normalized pure state on a register of arbitrary dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T> {
    data: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    /// Wraps amplitudes that are already normalized (norm within [`STATE_NORM_TOL`]).
    pub fn new(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::Dimension(
                "state vector must have dimension >= 1".into(),
            ));
        }
        let v = Self { data: amplitudes };
        let dev = (v.norm() - T::one()).abs();
        let tol = T::tolerance(STATE_NORM_TOL);
        if !(dev <= tol) {
            return Err(Error::Domain(format!(
                "state vector norm deviates from 1 by {:.3e}",
                dev.as_f64()
            )));
        }
        Ok(v)
    }

    /// Rescales arbitrary amplitudes to unit norm.
    pub fn normalized(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::Dimension(
                "state vector must have dimension >= 1".into(),
            ));
        }
        let norm = amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, x| a + x)
            .sqrt();
        if norm <= T::tolerance(STATE_NORM_TOL) {
            return Err(Error::Domain("cannot normalize the zero vector".into()));
        }
        let inv = T::one() / norm;
        Ok(Self {
            data: amplitudes.into_iter().map(|z| z.scale(inv)).collect(),
        })
    }

    /// Computational basis state `|index⟩`.
    pub fn basis_state(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::Index(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        let mut data = vec![Complex::new(T::zero(), T::zero()); dim];
        data[index] = Complex::one();
        Ok(Self { data })
    }

    /// Builds a state from sparse real amplitudes `(basis index, coefficient)`.
    pub fn from_real_terms(dim: usize, terms: &[(usize, T)]) -> Result<Self> {
        let mut data = vec![Complex::new(T::zero(), T::zero()); dim];
        for &(idx, coeff) in terms {
            if idx >= dim {
                return Err(Error::Index(format!(
                    "basis index {idx} out of range for dimension {dim}"
                )));
            }
            data[idx] += Complex::from(coeff);
        }
        Self::new(data)
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn amplitude(&self, index: usize) -> Complex<T> {
        self.data[index]
    }

    pub fn norm(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, x| a + x)
            .sqrt()
    }

    /// Inner product `⟨self|other⟩` (self conjugated).
    pub fn inner(&self, other: &Self) -> Complex<T> {
        assert_eq!(
            self.dim(),
            other.dim(),
            "inner product needs equal dimensions"
        );
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Rank-1 projector `|ψ⟩⟨ψ|`.
    pub fn projector(&self) -> ComplexMatrix<T> {
        ComplexMatrix::from_fn(self.dim(), |i, j| self.data[i] * self.data[j].conj())
    }
}

/// Kronecker product; `(a ⊗ b)(i·db+k, j·db+l) = a(i,j)·b(k,l)`.
pub fn kron<T: Scalar>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let da = a.dim();
    let db = b.dim();
    let dim = da
        .checked_mul(db)
        .filter(|d| d.checked_mul(*d).is_some())
        .ok_or_else(|| Error::Dimension(format!("Kronecker dimension {da}x{db} overflows")))?;
    let mut out = ComplexMatrix::zeros(dim);
    for i in 0..da {
        for j in 0..da {
            let aij = a[(i, j)];
            if aij.re.is_zero() && aij.im.is_zero() {
                continue;
            }
            for k in 0..db {
                for l in 0..db {
                    out[(i * db + k, j * db + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    Ok(out)
}

/// Checks that `rho` is a `2^num_qubits` square matrix and that the qubit
/// list is strictly increasing and in range.
fn check_register<T: Scalar>(
    rho: &ComplexMatrix<T>,
    num_qubits: usize,
    qubits: &[usize],
    what: &str,
) -> Result<()> {
    let expected = 1usize
        .checked_shl(num_qubits as u32)
        .ok_or_else(|| Error::Dimension(format!("register of {num_qubits} qubits overflows")))?;
    if num_qubits == 0 || rho.dim() != expected {
        return Err(Error::Dimension(format!(
            "matrix dimension {} does not match a {num_qubits}-qubit register",
            rho.dim()
        )));
    }
    if qubits.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Index(format!(
            "{what} qubit indices must be strictly increasing"
        )));
    }
    if qubits.iter().any(|&q| q >= num_qubits) {
        return Err(Error::Index(format!(
            "{what} qubit index out of range for {num_qubits} qubits"
        )));
    }
    Ok(())
}

/// Traces out every qubit not listed in `keep` (big-endian indices,
/// strictly increasing). The result keeps the listed qubits in order.
pub fn partial_trace<T: Scalar>(
    rho: &ComplexMatrix<T>,
    num_qubits: usize,
    keep: &[usize],
) -> Result<ComplexMatrix<T>> {
    check_register(rho, num_qubits, keep, "keep")?;
    if keep.is_empty() {
        return Err(Error::Index(
            "keep list must name at least one qubit".into(),
        ));
    }
    let traced: Vec<usize> = (0..num_qubits).filter(|q| !keep.contains(q)).collect();
    // Bit position (from the least significant end) of each qubit index.
    let pos = |q: usize| num_qubits - 1 - q;
    let kept_dim = 1usize << keep.len();
    let env_dim = 1usize << traced.len();

    let spread = |compact: usize, qubits: &[usize]| -> usize {
        let mut full = 0usize;
        for (bit, &q) in qubits.iter().rev().enumerate() {
            if compact >> bit & 1 == 1 {
                full |= 1 << pos(q);
            }
        }
        full
    };

    let mut out = ComplexMatrix::zeros(kept_dim);
    for ik in 0..kept_dim {
        let base_i = spread(ik, keep);
        for jk in 0..kept_dim {
            let base_j = spread(jk, keep);
            let mut acc = Complex::new(T::zero(), T::zero());
            for e in 0..env_dim {
                let env = spread(e, &traced);
                acc += rho[(base_i | env, base_j | env)];
            }
            out[(ik, jk)] = acc;
        }
    }
    Ok(out)
}

/// Transposes the listed qubits (big-endian indices, strictly increasing),
/// leaving the rest untouched.
pub fn partial_transpose<T: Scalar>(
    rho: &ComplexMatrix<T>,
    num_qubits: usize,
    transposed: &[usize],
) -> Result<ComplexMatrix<T>> {
    check_register(rho, num_qubits, transposed, "transposed")?;
    let mask: usize = transposed
        .iter()
        .map(|&q| 1usize << (num_qubits - 1 - q))
        .sum();
    let dim = rho.dim();
    let mut out = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            // Swap the masked bits of the row and column indices.
            let i_src = (i & !mask) | (j & mask);
            let j_src = (j & !mask) | (i & mask);
            out[(i, j)] = rho[(i_src, j_src)];
        }
    }
    Ok(out)
}

/// Pauli X.
pub fn pauli_x<T: Scalar>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 1)] = Complex::one();
    m[(1, 0)] = Complex::one();
    m
}

/// Pauli Y.
pub fn pauli_y<T: Scalar>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 1)] = -Complex::i();
    m[(1, 0)] = Complex::i();
    m
}

/// Pauli Z.
pub fn pauli_z<T: Scalar>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 0)] = Complex::one();
    m[(1, 1)] = -Complex::<T>::one();
    m
}
