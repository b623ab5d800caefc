//! Concurrence, negativity, and the teleportation-fidelity bounds they imply
//! for two-qubit channels.

use crate::linalg::{
    hermitian_eigen, jacobi_eigen, kron, partial_transpose, pauli_y, trace_norm, ComplexMatrix,
};
use crate::states::DensityMatrix;
use crate::{Error, Result, Scalar};

/// Concurrence below this routes the fidelity bounds to the separable branch.
pub const CONCURRENCE_FLOOR: f64 = 1e-12;
/// `N/C` ratios this close to one are snapped to one, collapsing the window.
///
/// Negativity and concurrence come from different eigensolves; when they
/// agree physically (pure states, Werner states) the computed ratio sits
/// within roundoff of 1, and `√(1 - r²)` would amplify that roundoff to
/// ~1e-5. Snapping keeps the coincident bounds exactly equal.
pub const RATIO_SNAP: f64 = 1e-6;

/// Fidelity window of a two-qubit channel together with the entanglement
/// measures it is built from: `lower ≤ F* ≤ upper` with
/// `upper = (1 + N)/2` and `lower = (1 + N/(1 + √(1 - (N/C)²)))/2`.
#[derive(Clone, Copy, Debug)]
pub struct FidelityBounds<T> {
    pub lower: T,
    pub upper: T,
    pub negativity: T,
    pub concurrence: T,
}

/// Wootters concurrence `C = max(0, μ₁ - μ₂ - μ₃ - μ₄)`, the `μ_i` being the
/// descending square roots of the eigenvalues of `ρ (σy⊗σy) ρ* (σy⊗σy)`.
///
/// The eigenvalues are taken from the Hermitian similarity-equivalent form
/// `√ρ (σy⊗σy) ρ* (σy⊗σy) √ρ`, which shares the nonzero spectrum.
pub fn concurrence<T: Scalar>(rho: &DensityMatrix<T>) -> Result<T> {
    check_two_qubit(rho)?;
    let yy = kron(&pauli_y::<T>(), &pauli_y::<T>())?;
    let spin_flipped = yy.matmul(&rho.matrix().conjugate()).matmul(&yy);
    let sqrt_rho = psd_sqrt(rho.matrix())?;
    let hermitian_form = sqrt_rho.matmul(&spin_flipped).matmul(&sqrt_rho);
    let eigenvalues = jacobi_eigen(&hermitian_form)?.values;
    // Rank-deficient inputs leave eigenvalues of order 1e-17 whose square
    // roots would pollute the alternating sum; clamp them to zero first.
    let clamp = T::tolerance(crate::correlations::EIGENVALUE_CLAMP);
    let mut mus: Vec<T> = eigenvalues
        .into_iter()
        .map(|v| if v <= clamp { T::zero() } else { v.sqrt() })
        .collect();
    mus.sort_by(|a, b| b.partial_cmp(a).expect("finite concurrence roots"));
    Ok((mus[0] - mus[1] - mus[2] - mus[3]).max(T::zero()))
}

/// Negativity `N = ‖ρ^Γ‖₁ - 1`, clamped to be nonnegative. With this
/// normalization `N = C` on pure states and the Werner fidelity window closes.
pub fn negativity<T: Scalar>(rho: &DensityMatrix<T>) -> Result<T> {
    check_two_qubit(rho)?;
    let pt = partial_transpose(rho.matrix(), 2, &[1])?;
    Ok((trace_norm(&pt)? - T::one()).max(T::zero()))
}

/// Fidelity window of `rho` used as a one-qubit teleportation channel.
///
/// A separable state (`C` below [`CONCURRENCE_FLOOR`], hence `N = 0` for two
/// qubits) pins both bounds at 1/2; otherwise the ratio `N/C` is clamped to
/// `[0, 1]` before the square root.
pub fn fidelity_bounds<T: Scalar>(rho: &DensityMatrix<T>) -> Result<FidelityBounds<T>> {
    let c = concurrence(rho)?;
    let n = negativity(rho)?;
    let half = T::real(0.5);
    if c < T::tolerance(CONCURRENCE_FLOOR) {
        return Ok(FidelityBounds {
            lower: half,
            upper: half,
            negativity: T::zero(),
            concurrence: c,
        });
    }
    let mut ratio = (n / c).min(T::one());
    if T::one() - ratio <= T::tolerance(RATIO_SNAP) {
        ratio = T::one();
    }
    let lower = half * (T::one() + n / (T::one() + (T::one() - ratio * ratio).sqrt()));
    let upper = half * (T::one() + n);
    Ok(FidelityBounds {
        lower,
        upper,
        negativity: n,
        concurrence: c,
    })
}

fn check_two_qubit<T: Scalar>(rho: &DensityMatrix<T>) -> Result<()> {
    if rho.num_qubits() != 2 {
        return Err(Error::Dimension(format!(
            "expected a two-qubit state, got {} qubits",
            rho.num_qubits()
        )));
    }
    Ok(())
}

/// Principal square root of a Hermitian PSD matrix via its eigenpairs;
/// eigenvalues within the density-matrix floor of zero are clamped first.
fn psd_sqrt<T: Scalar>(m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let eig = hermitian_eigen(m)?;
    let n = m.dim();
    let mut out = ComplexMatrix::zeros(n);
    for (idx, &value) in eig.values.iter().enumerate() {
        let root = value.max(T::zero()).sqrt();
        if root.is_zero() {
            continue;
        }
        let col = eig.vectors.column(idx);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] += (col[i] * col[j].conj()).scale(root);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell_phi_plus, werner};
    use crate::DensityMatrix64;

    fn bell_state() -> DensityMatrix64 {
        DensityMatrix::from_pure(&bell_phi_plus::<f64>(), 2).unwrap()
    }

    fn maximally_mixed() -> DensityMatrix64 {
        DensityMatrix::new(ComplexMatrix::identity(4).scale_re(0.25), 2).unwrap()
    }

    fn werner_concurrence(lambda: f64) -> f64 {
        ((3.0 * lambda - 1.0) / 2.0).max(0.0)
    }

    #[test]
    fn concurrence_extremes() {
        assert!((concurrence(&bell_state()).unwrap() - 1.0).abs() < 1e-10);
        assert!(concurrence(&maximally_mixed()).unwrap().abs() < 1e-10);
    }

    #[test]
    fn concurrence_of_werner_matches_closed_form() {
        for k in 0..=10 {
            let lambda = k as f64 / 10.0;
            let c = concurrence(&werner::<f64>(lambda).unwrap()).unwrap();
            assert!(
                (c - werner_concurrence(lambda)).abs() < 1e-9,
                "λ = {lambda}: {c}"
            );
        }
        assert!((concurrence(&werner::<f64>(0.7).unwrap()).unwrap() - 0.55).abs() < 1e-9);
    }

    #[test]
    fn negativity_cases() {
        assert!((negativity(&bell_state()).unwrap() - 1.0).abs() < 1e-10);
        assert!(
            negativity(&werner::<f64>(1.0 / 3.0).unwrap())
                .unwrap()
                .abs()
                < 1e-10
        );
        assert!((negativity(&werner::<f64>(0.7).unwrap()).unwrap() - 0.55).abs() < 1e-9);
    }

    #[test]
    fn werner_bounds_coincide() {
        for k in 0..=10 {
            let lambda = k as f64 / 10.0;
            let b = fidelity_bounds(&werner::<f64>(lambda).unwrap()).unwrap();
            assert!(
                (b.upper - b.lower).abs() < 1e-9,
                "λ = {lambda}: window {} .. {}",
                b.lower,
                b.upper
            );
        }
    }

    #[test]
    fn fidelity_bounds_values() {
        let perfect = fidelity_bounds(&werner::<f64>(1.0).unwrap()).unwrap();
        assert!((perfect.lower - 1.0).abs() < 1e-9);
        assert!((perfect.upper - 1.0).abs() < 1e-9);

        let b = fidelity_bounds(&werner::<f64>(0.7).unwrap()).unwrap();
        assert!((b.upper - 0.775).abs() < 1e-9);

        let separable = fidelity_bounds(&werner::<f64>(0.2).unwrap()).unwrap();
        assert!((separable.lower - 0.5).abs() < 1e-12);
        assert!((separable.upper - 0.5).abs() < 1e-12);
        assert!(separable.negativity.abs() < 1e-12);
    }

    #[test]
    fn rejects_wrong_register_size() {
        let ch = crate::states::channel::<f64>(crate::states::ChannelKind::W3);
        let three = DensityMatrix::from_pure(&ch.state, 3).unwrap();
        assert!(matches!(concurrence(&three), Err(Error::Dimension(_))));
        assert!(matches!(negativity(&three), Err(Error::Dimension(_))));
    }

    #[test]
    fn psd_sqrt_squares_back() {
        let rho = werner::<f64>(0.63).unwrap();
        let root = psd_sqrt(rho.matrix()).unwrap();
        assert!(root.matmul(&root).max_abs_diff(rho.matrix()) < 1e-10);
    }
}
