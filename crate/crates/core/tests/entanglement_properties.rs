//! Entanglement-measure invariants on random separable and pure states.

mod common;

use common::{random_pure_state, random_separable, Rng};
use qdiscord::{concurrence, fidelity_bounds, negativity, werner, DensityMatrix64};

#[test]
fn negativity_and_concurrence_vanish_together() {
    let mut rng = Rng::new(41);
    // Separable mixtures: both zero.
    for _ in 0..10 {
        let rho = random_separable(&mut rng, 4);
        let n = negativity(&rho).unwrap();
        let c = concurrence(&rho).unwrap();
        assert!(n < 1e-6, "separable state with negativity {n}");
        assert!(c < 1e-6, "separable state with concurrence {c}");
    }
    // Random pure states: both positive (almost surely) and equal.
    for _ in 0..10 {
        let psi = random_pure_state(&mut rng, 4);
        let rho = DensityMatrix64::from_pure(&psi, 2).unwrap();
        let n = negativity(&rho).unwrap();
        let c = concurrence(&rho).unwrap();
        assert!((n - c).abs() < 1e-9, "pure state: N = {n}, C = {c}");
        assert!((n < 1e-6) == (c < 1e-6));
    }
}

#[test]
fn pure_state_bounds_coincide() {
    let mut rng = Rng::new(42);
    for _ in 0..10 {
        let psi = random_pure_state(&mut rng, 4);
        let rho = DensityMatrix64::from_pure(&psi, 2).unwrap();
        let b = fidelity_bounds(&rho).unwrap();
        assert!(
            (b.upper - b.lower).abs() < 1e-9,
            "pure-state window {} .. {}",
            b.lower,
            b.upper
        );
    }
}

#[test]
fn werner_negativity_is_nondecreasing() {
    let mut previous = -1.0;
    for k in 0..=10 {
        let lambda = k as f64 / 10.0;
        let n = negativity(&werner(lambda).unwrap()).unwrap();
        assert!(n >= previous - 1e-12, "λ = {lambda}: {n} < {previous}");
        previous = n;
    }
}

#[test]
fn negativity_never_exceeds_concurrence() {
    let mut rng = Rng::new(43);
    for _ in 0..15 {
        let rho = common::random_density_matrix(&mut rng, 2);
        let n = negativity(&rho).unwrap();
        let c = concurrence(&rho).unwrap();
        assert!(n <= c + 1e-9, "N = {n} above C = {c}");
        let b = fidelity_bounds(&rho).unwrap();
        assert!(b.lower <= b.upper + 1e-12);
        assert!((b.upper - 0.5 * (1.0 + b.negativity)).abs() < 1e-12);
    }
}
