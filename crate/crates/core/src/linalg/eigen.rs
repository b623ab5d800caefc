//! Cyclic Jacobi eigensolver for small dense complex Hermitian matrices.

use num_complex::Complex;

use super::ComplexMatrix;
use crate::{Error, Result, Scalar};

/// Hermiticity tolerance `max |m - m†|` required of eigensolver inputs.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Off-diagonal Frobenius norm at which a sweep stops.
pub const JACOBI_OFF_TOL: f64 = 1e-12;
/// Jacobi sweep budget; matrices here are at most 64x64 and converge in a handful.
pub const MAX_JACOBI_SWEEPS: usize = 100;

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
/// order and the matching orthonormal eigenvectors as columns.
#[derive(Clone, Debug)]
pub struct HermitianEigen<T> {
    pub values: Vec<T>,
    pub vectors: ComplexMatrix<T>,
}

/// Eigendecomposition via cyclic Jacobi rotations.
///
/// The input must be Hermitian within [`HERMITICITY_TOL`]; it is symmetrized
/// as `(m + m†)/2` before the sweeps to wash out accumulated rounding.
pub fn hermitian_eigen<T: Scalar>(m: &ComplexMatrix<T>) -> Result<HermitianEigen<T>> {
    let residual = m.hermiticity_residual();
    let tol = T::tolerance(HERMITICITY_TOL);
    if !(residual <= tol) {
        return Err(Error::NotHermitian {
            residual: residual.as_f64(),
            tolerance: tol.as_f64(),
        });
    }
    jacobi_eigen(m)
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues<T: Scalar>(m: &ComplexMatrix<T>) -> Result<Vec<T>> {
    hermitian_eigen(m).map(|e| e.values)
}

/// Sum of the absolute eigenvalues of a Hermitian matrix.
pub fn trace_norm<T: Scalar>(m: &ComplexMatrix<T>) -> Result<T> {
    Ok(hermitian_eigenvalues(m)?.into_iter().map(|v| v.abs()).sum())
}

/// Jacobi sweeps on the symmetrized input, without the Hermiticity gate.
/// Internal entry point for callers that symmetrize deliberately.
pub(crate) fn jacobi_eigen<T: Scalar>(m: &ComplexMatrix<T>) -> Result<HermitianEigen<T>> {
    let n = m.dim();
    let mut a = m.symmetrized();
    let mut v = ComplexMatrix::identity(n);

    // The 1e-12 target is unreachable at f32; floor at machine scale.
    let off_tol = T::tolerance(JACOBI_OFF_TOL).max(T::epsilon() * a.frobenius_norm());

    let mut converged = false;
    for _ in 0..MAX_JACOBI_SWEEPS {
        if a.offdiag_frobenius() <= off_tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && a.offdiag_frobenius() > off_tol {
        return Err(Error::NoConvergence {
            off: a.offdiag_frobenius().as_f64(),
            sweeps: MAX_JACOBI_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .expect("finite eigenvalues")
    });
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

/// One two-sided rotation `a ← U† a U`, `v ← v U` zeroing `a[(p,q)]`.
///
/// With `g = a[(p,q)] = |g| e^{iφ}` the unitary is the phase-twisted Givens
/// rotation `U[(p,p)] = c`, `U[(p,q)] = -σ e^{iφ}`, `U[(q,p)] = σ e^{-iφ}`,
/// `U[(q,q)] = c`, where `(c, σ)` solve the familiar real Jacobi equations
/// for the 2x2 block `[[a_pp, |g|], [|g|, a_qq]]`.
fn rotate<T: Scalar>(a: &mut ComplexMatrix<T>, v: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let g = a[(p, q)];
    let abs_g = g.norm();
    if abs_g.is_zero() {
        return;
    }
    let phase = g.unscale(abs_g); // e^{iφ}
    let alpha = a[(p, p)].re;
    let beta = a[(q, q)].re;
    let tau = (alpha - beta) / (abs_g + abs_g);
    // Smaller-magnitude root of t² + 2τt − 1 = 0, for stability.
    let t = if tau.is_zero() {
        T::one()
    } else {
        tau.signum() / (tau.abs() + (tau * tau + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;

    let n = a.dim();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        let new_kp = akp.scale(c) + (phase.conj() * akq).scale(s);
        let new_kq = akq.scale(c) - (phase * akp).scale(s);
        a[(k, p)] = new_kp;
        a[(p, k)] = new_kp.conj();
        a[(k, q)] = new_kq;
        a[(q, k)] = new_kq.conj();
    }
    let shift = t * abs_g;
    a[(p, p)] = Complex::from(alpha + shift);
    a[(q, q)] = Complex::from(beta - shift);
    a[(p, q)] = Complex::new(T::zero(), T::zero());
    a[(q, p)] = Complex::new(T::zero(), T::zero());

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp.scale(c) + (phase.conj() * vkq).scale(s);
        v[(k, q)] = vkq.scale(c) - (phase * vkp).scale(s);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kron, partial_transpose, pauli_x, pauli_y, StateVector};

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn eigenvalues_of_scaled_identity() {
        let m = ComplexMatrix::<f64>::identity(4).scale_re(0.25);
        let evs = hermitian_eigenvalues(&m).unwrap();
        assert_eq!(evs.len(), 4);
        for v in evs {
            assert!((v - 0.25).abs() < 1e-14);
        }
    }

    #[test]
    fn pauli_spectra() {
        for m in [pauli_x::<f64>(), pauli_y::<f64>()] {
            let evs = hermitian_eigenvalues(&m).unwrap();
            assert!((evs[0] + 1.0).abs() < 1e-12);
            assert!((evs[1] - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn werner_spectrum_matches_closed_form() {
        let rho = crate::states::werner::<f64>(0.5).unwrap();
        let evs = hermitian_eigenvalues(rho.matrix()).unwrap();
        let expected = [0.125, 0.125, 0.125, 0.625];
        for (got, want) in evs.iter().zip(expected) {
            assert!((got - want).abs() < 1e-12);
        }
        let sum: f64 = evs.iter().sum();
        assert!((sum - 1.0).abs() < 1e-10);
    }

    #[test]
    fn rejects_non_hermitian_input() {
        let mut m = ComplexMatrix::<f64>::identity(2);
        m[(0, 1)] = c(1.0, 0.0); // m[(1,0)] stays 0
        assert!(matches!(
            hermitian_eigen(&m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn eigenpairs_reconstruct_a_complex_hermitian_matrix() {
        let m = ComplexMatrix::from_rows(vec![
            vec![c(2.0, 0.0), c(0.3, -0.7), c(0.0, 1.1)],
            vec![c(0.3, 0.7), c(-1.0, 0.0), c(0.5, 0.2)],
            vec![c(0.0, -1.1), c(0.5, -0.2), c(0.4, 0.0)],
        ])
        .unwrap();
        let eig = hermitian_eigen(&m).unwrap();
        let mut rebuilt = ComplexMatrix::zeros(3);
        for (idx, &val) in eig.values.iter().enumerate() {
            let col = eig.vectors.column(idx);
            for i in 0..3 {
                for j in 0..3 {
                    rebuilt[(i, j)] += (col[i] * col[j].conj()).scale(val);
                }
            }
        }
        assert!(rebuilt.max_abs_diff(&m) < 1e-9);
        // Eigenvector columns are orthonormal.
        let gram = eig.vectors.adjoint().matmul(&eig.vectors);
        assert!(gram.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-10);
    }

    #[test]
    fn trace_norm_cases() {
        let m = ComplexMatrix::<f64>::identity(4).scale_re(0.25);
        assert!((trace_norm(&m).unwrap() - 1.0).abs() < 1e-12);

        let s = std::f64::consts::FRAC_1_SQRT_2;
        let bell = StateVector::from_real_terms(4, &[(0b00, s), (0b11, s)])
            .unwrap()
            .projector();
        let pt = partial_transpose(&bell, 2, &[1]).unwrap();
        assert!((trace_norm(&pt).unwrap() - 2.0).abs() < 1e-12);

        let w = crate::states::werner::<f64>(1.0 / 3.0).unwrap();
        let pt = partial_transpose(w.matrix(), 2, &[1]).unwrap();
        assert!((trace_norm(&pt).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn eigenvalue_sum_matches_trace_for_zz() {
        let zz = kron(
            &crate::linalg::pauli_z::<f64>(),
            &crate::linalg::pauli_z::<f64>(),
        )
        .unwrap();
        let evs = hermitian_eigenvalues(&zz).unwrap();
        assert_eq!(evs, vec![-1.0, -1.0, 1.0, 1.0]);
    }
}
