//! Random-input invariants of the matrix kernel.

mod common;

use common::{ginibre, random_density_matrix, Rng};
use qdiscord::{hermitian_eigen, kron, partial_trace, partial_transpose, Matrix64};

#[test]
fn kron_is_associative_on_random_inputs() {
    let mut rng = Rng::new(11);
    for _ in 0..20 {
        let a = ginibre(&mut rng, 2);
        let b = ginibre(&mut rng, 2);
        let c = ginibre(&mut rng, 2);
        let left = kron(&kron(&a, &b).unwrap(), &c).unwrap();
        let right = kron(&a, &kron(&b, &c).unwrap()).unwrap();
        assert!(left.max_abs_diff(&right) < 1e-12);
    }
}

#[test]
fn partial_trace_of_kron_gives_scaled_first_factor() {
    let mut rng = Rng::new(12);
    for _ in 0..20 {
        let a = ginibre(&mut rng, 4);
        let b = ginibre(&mut rng, 4);
        let prod = kron(&a, &b).unwrap();
        let reduced = partial_trace(&prod, 4, &[0, 1]).unwrap();
        let expected = a.scale(b.trace());
        assert!(reduced.max_abs_diff(&expected) < 1e-12);
    }
}

#[test]
fn eigenpairs_reconstruct_random_hermitian_matrices() {
    let mut rng = Rng::new(13);
    for dim in [2usize, 3, 4, 8] {
        for _ in 0..5 {
            let g = ginibre(&mut rng, dim);
            let m = (&g + &g.adjoint()).scale_re(0.5);
            let eig = hermitian_eigen(&m).unwrap();
            let mut rebuilt = Matrix64::zeros(dim);
            for (idx, &value) in eig.values.iter().enumerate() {
                let col = eig.vectors.column(idx);
                for i in 0..dim {
                    for j in 0..dim {
                        rebuilt[(i, j)] += (col[i] * col[j].conj()).scale(value);
                    }
                }
            }
            assert!(
                rebuilt.max_abs_diff(&m) < 1e-9,
                "dim {dim}: residual {}",
                rebuilt.max_abs_diff(&m)
            );
        }
    }
}

#[test]
fn partial_transpose_is_involutive_on_random_states() {
    let mut rng = Rng::new(14);
    for _ in 0..10 {
        let rho = random_density_matrix(&mut rng, 2);
        for subsystem in [[0usize], [1usize]] {
            let once = partial_transpose(rho.matrix(), 2, &subsystem).unwrap();
            let twice = partial_transpose(&once, 2, &subsystem).unwrap();
            assert!(twice.max_abs_diff(rho.matrix()) < 1e-14);
            // Hermiticity is preserved as well.
            assert!(once.hermiticity_residual() < 1e-14);
        }
    }
    // Three-qubit case, transposing a middle qubit.
    let rho = random_density_matrix(&mut rng, 3);
    let once = partial_transpose(rho.matrix(), 3, &[1]).unwrap();
    let twice = partial_transpose(&once, 3, &[1]).unwrap();
    assert!(twice.max_abs_diff(rho.matrix()) < 1e-14);
}

#[test]
fn partial_trace_preserves_trace_on_random_states() {
    let mut rng = Rng::new(15);
    for _ in 0..10 {
        let rho = random_density_matrix(&mut rng, 3);
        for keep in [vec![0usize], vec![1], vec![2], vec![0, 2]] {
            let reduced = partial_trace(rho.matrix(), 3, &keep).unwrap();
            assert!((reduced.trace().re - 1.0).abs() < 1e-12);
            assert!(reduced.trace().im.abs() < 1e-12);
        }
    }
}
