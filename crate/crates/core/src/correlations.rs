//! Entropic quantities and quantum discord for two-qubit states.
//!
//! Discord is computed as mutual information minus the best classical
//! correlation extractable by a rank-1 projective measurement on one qubit.
//! The maximization over measurement directions runs a coarse Bloch-sphere
//! grid followed by Nelder-Mead refinement of the best cells; an exhaustive
//! grid version ([`brute_force_discord`]) serves as an independent oracle
//! for the minimizer.

use num_complex::Complex;

use crate::linalg::{hermitian_eigenvalues, partial_trace, ComplexMatrix};
use crate::states::DensityMatrix;
use crate::{Error, Result, Scalar};

/// Eigenvalues this close to zero are treated as exactly zero before logs.
pub const EIGENVALUE_CLAMP: f64 = 1e-12;
/// Measurement outcomes with probability below this contribute nothing.
pub const NEGLIGIBLE_PROBABILITY: f64 = 1e-12;
/// Discord values in `[-DISCORD_ROUNDING_FLOOR, 0)` are reported as zero.
pub const DISCORD_ROUNDING_FLOOR: f64 = 1e-9;

/// A projective measurement direction on the Bloch sphere.
///
/// The unit vector `n = (sinθ cosφ, sinθ sinφ, cosθ)` defines the projector
/// pair `Π± = (I ± n·σ)/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementDirection<T> {
    theta: T,
    phi: T,
}

impl<T: Scalar> MeasurementDirection<T> {
    /// Requires `θ ∈ [0, π]` and `φ ∈ [0, 2π)`.
    pub fn new(theta: T, phi: T) -> Result<Self> {
        if !(theta >= T::zero() && theta <= T::PI()) {
            return Err(Error::Domain(format!("polar angle {theta} outside [0, π]")));
        }
        if !(phi >= T::zero() && phi < T::TAU()) {
            return Err(Error::Domain(format!("azimuth {phi} outside [0, 2π)")));
        }
        Ok(Self { theta, phi })
    }

    /// Folds arbitrary angles back into the canonical ranges.
    pub fn from_raw_angles(theta: T, phi: T) -> Self {
        let (theta, phi) = canonical_angles(theta, phi);
        Self { theta, phi }
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn phi(&self) -> T {
        self.phi
    }

    /// The Bloch vector `(nx, ny, nz)`.
    pub fn bloch_vector(&self) -> [T; 3] {
        let (sin_t, cos_t) = self.theta.sin_cos();
        let (sin_p, cos_p) = self.phi.sin_cos();
        [sin_t * cos_p, sin_t * sin_p, cos_t]
    }

    /// The projector pair `Π± = (I ± n·σ)/2` as 2x2 matrices.
    pub fn projectors(&self) -> (ComplexMatrix<T>, ComplexMatrix<T>) {
        let [u_plus, u_minus] = spinors(self.theta, self.phi);
        (projector2(&u_plus), projector2(&u_minus))
    }
}

/// Discord value together with the minimizing measurement direction.
#[derive(Clone, Copy, Debug)]
pub struct DiscordResult<T> {
    /// Discord in bits, clamped to `[0, 2]` for two-qubit inputs.
    pub value: T,
    /// Direction achieving the measured-entropy minimum.
    pub argmin: MeasurementDirection<T>,
    /// The qubit that was measured.
    pub measured_subsystem: usize,
}

/// Minimizer settings: grid resolution and refinement stopping rules.
#[derive(Clone, Copy, Debug)]
pub struct DiscordOptions<T> {
    /// Polar grid count (cell midpoints over `[0, π]`).
    pub grid_theta: usize,
    /// Azimuthal grid count (over `[0, 2π)`).
    pub grid_phi: usize,
    /// Function-value tolerance of the simplex refinement.
    pub refine_tol: T,
    /// Simplex diameter at which refinement stops.
    pub simplex_tol: T,
    /// Number of best grid cells refined.
    pub seeds: usize,
    /// Iteration cap per refinement.
    pub max_refine_iters: usize,
}

impl<T: Scalar> Default for DiscordOptions<T> {
    fn default() -> Self {
        Self {
            grid_theta: 32,
            grid_phi: 64,
            refine_tol: T::real(1e-8),
            simplex_tol: T::real(1e-6),
            seeds: 5,
            max_refine_iters: 200,
        }
    }
}

/// `S(ρ) = -Σ λ_i log₂ λ_i`, in bits.
pub fn von_neumann_entropy<T: Scalar>(rho: &DensityMatrix<T>) -> T {
    entropy_of_matrix(rho.matrix()).max(T::zero())
}

/// Entropy of a Hermitian PSD matrix, with near-zero eigenvalues clamped.
/// The matrix is symmetrized before the eigensolve.
pub(crate) fn entropy_of_matrix<T: Scalar>(m: &ComplexMatrix<T>) -> T {
    hermitian_eigenvalues(&m.symmetrized())
        .expect("symmetrized matrix is Hermitian")
        .into_iter()
        .map(entropy_term)
        .sum()
}

fn entropy_term<T: Scalar>(lambda: T) -> T {
    if lambda <= T::tolerance(EIGENVALUE_CLAMP) {
        T::zero()
    } else {
        -(lambda * lambda.log2())
    }
}

/// `I(ρ) = S(ρ_A) + S(ρ_B) - S(ρ)` for the bipartition `subsystem_a` vs rest.
pub fn mutual_information<T: Scalar>(rho: &DensityMatrix<T>, subsystem_a: &[usize]) -> Result<T> {
    let n = rho.num_qubits();
    if subsystem_a.is_empty() || subsystem_a.len() >= n {
        return Err(Error::Index(
            "bipartition must leave qubits on both sides".into(),
        ));
    }
    let complement: Vec<usize> = (0..n).filter(|q| !subsystem_a.contains(q)).collect();
    let s_a = entropy_of_matrix(&partial_trace(rho.matrix(), n, subsystem_a)?);
    let s_b = entropy_of_matrix(&partial_trace(rho.matrix(), n, &complement)?);
    let s_ab = entropy_of_matrix(rho.matrix());
    Ok(s_a + s_b - s_ab)
}

/// Measured conditional entropy `S(A|Π_B) = Σ p_i S(ρ_i)` for the projective
/// measurement `dir` on qubit `measured` of a two-qubit state.
pub fn conditional_entropy_measured<T: Scalar>(
    rho: &DensityMatrix<T>,
    dir: MeasurementDirection<T>,
    measured: usize,
) -> Result<T> {
    check_two_qubit(rho, measured)?;
    Ok(conditional_entropy_kernel(
        rho.matrix(),
        dir.theta,
        dir.phi,
        measured,
    ))
}

/// Classical correlation `J = S(ρ_A) - S(A|Π_B)` extracted by measuring
/// `measured` along `dir`.
pub fn classical_correlation<T: Scalar>(
    rho: &DensityMatrix<T>,
    dir: MeasurementDirection<T>,
    measured: usize,
) -> Result<T> {
    check_two_qubit(rho, measured)?;
    let other = 1 - measured;
    let s_other = entropy_of_matrix(&partial_trace(rho.matrix(), 2, &[other])?);
    Ok(s_other - conditional_entropy_kernel(rho.matrix(), dir.theta, dir.phi, measured))
}

/// Quantum discord of a two-qubit state with the default minimizer settings.
pub fn quantum_discord<T: Scalar>(
    rho: &DensityMatrix<T>,
    measured: usize,
) -> Result<DiscordResult<T>> {
    quantum_discord_with(rho, measured, &DiscordOptions::default())
}

/// Quantum discord with explicit minimizer settings.
///
/// Runs a `grid_theta x grid_phi` scan of the measured conditional entropy,
/// refines the best `seeds` cells with a Nelder-Mead simplex, and reports
/// `I(ρ) - max_Π J`. Ties are broken toward the lexicographically smallest
/// `(θ, φ)`, so results do not depend on evaluation order.
pub fn quantum_discord_with<T: Scalar>(
    rho: &DensityMatrix<T>,
    measured: usize,
    opts: &DiscordOptions<T>,
) -> Result<DiscordResult<T>> {
    check_two_qubit(rho, measured)?;
    let m = rho.matrix();
    let other = 1 - measured;
    let s_other = entropy_of_matrix(&partial_trace(m, 2, &[other])?);
    let s_measured = entropy_of_matrix(&partial_trace(m, 2, &[measured])?);
    let s_joint = entropy_of_matrix(m);
    let mutual = s_other + s_measured - s_joint;

    let grid_theta = opts.grid_theta.max(2);
    let grid_phi = opts.grid_phi.max(2);
    let mut grid: Vec<(T, T, T)> = Vec::with_capacity(grid_theta * grid_phi);
    for i in 0..grid_theta {
        let theta = T::PI() * (T::from_usize(i).unwrap() + T::real(0.5))
            / T::from_usize(grid_theta).unwrap();
        for j in 0..grid_phi {
            let phi = T::TAU() * T::from_usize(j).unwrap() / T::from_usize(grid_phi).unwrap();
            let value = conditional_entropy_kernel(m, theta, phi, measured);
            grid.push((value, theta, phi));
        }
    }
    grid.sort_by(|a, b| {
        (a.0, a.1, a.2)
            .partial_cmp(&(b.0, b.1, b.2))
            .expect("finite objective values")
    });

    let step_theta = T::PI() / T::from_usize(grid_theta).unwrap() * T::real(0.5);
    let step_phi = T::TAU() / T::from_usize(grid_phi).unwrap() * T::real(0.5);
    let mut best = {
        let (v, t, p) = grid[0];
        let (t, p) = canonical_angles(t, p);
        (v, t, p)
    };
    for &(_, theta, phi) in grid.iter().take(opts.seeds.max(1)) {
        let (value, (t_raw, p_raw)) = nelder_mead_2d(
            &mut |t, p| conditional_entropy_kernel(m, t, p, measured),
            (theta, phi),
            (step_theta, step_phi),
            opts.refine_tol,
            opts.simplex_tol,
            opts.max_refine_iters,
        );
        let (t, p) = canonical_angles(t_raw, p_raw);
        if (value, t, p)
            .partial_cmp(&best)
            .expect("finite objective values")
            .is_lt()
        {
            best = (value, t, p);
        }
    }

    let (cond_min, theta, phi) = best;
    let value = clamp_discord(mutual - (s_other - cond_min));
    Ok(DiscordResult {
        value,
        argmin: MeasurementDirection { theta, phi },
        measured_subsystem: measured,
    })
}

/// Exhaustive-grid discord: a `grid_n x 2·grid_n` scan with no refinement.
///
/// Upper-bounds the refined value by at most the grid resolution error.
/// Intended as a test oracle; panics if `grid_n < 64`.
pub fn brute_force_discord<T: Scalar>(
    rho: &DensityMatrix<T>,
    measured: usize,
    grid_n: usize,
) -> Result<T> {
    assert!(
        grid_n >= 64,
        "brute-force grid must have at least 64 polar points"
    );
    check_two_qubit(rho, measured)?;
    let m = rho.matrix();
    let other = 1 - measured;
    let s_other = entropy_of_matrix(&partial_trace(m, 2, &[other])?);
    let s_measured = entropy_of_matrix(&partial_trace(m, 2, &[measured])?);
    let s_joint = entropy_of_matrix(m);
    let mutual = s_other + s_measured - s_joint;

    let grid_phi = 2 * grid_n;
    let mut cond_min = T::infinity();
    for i in 0..grid_n {
        let theta =
            T::PI() * (T::from_usize(i).unwrap() + T::real(0.5)) / T::from_usize(grid_n).unwrap();
        for j in 0..grid_phi {
            let phi = T::TAU() * T::from_usize(j).unwrap() / T::from_usize(grid_phi).unwrap();
            let value = conditional_entropy_kernel(m, theta, phi, measured);
            if value < cond_min {
                cond_min = value;
            }
        }
    }
    Ok(clamp_discord(mutual - (s_other - cond_min)))
}

fn check_two_qubit<T: Scalar>(rho: &DensityMatrix<T>, measured: usize) -> Result<()> {
    if rho.num_qubits() != 2 {
        return Err(Error::Dimension(format!(
            "expected a two-qubit state, got {} qubits",
            rho.num_qubits()
        )));
    }
    if measured > 1 {
        return Err(Error::Index(format!(
            "measured qubit index {measured} must be 0 or 1"
        )));
    }
    Ok(())
}

fn clamp_discord<T: Scalar>(value: T) -> T {
    debug_assert!(
        value >= -T::tolerance(DISCORD_ROUNDING_FLOOR),
        "discord {value} below the rounding floor"
    );
    value.max(T::zero())
}

/// Measurement spinors for `±n`: `|n⟩ = (cos θ/2, e^{iφ} sin θ/2)` and its
/// orthogonal complement. `|±n⟩⟨±n| = (I ± n·σ)/2`.
fn spinors<T: Scalar>(theta: T, phi: T) -> [[Complex<T>; 2]; 2] {
    let (sin_ht, cos_ht) = (theta * T::real(0.5)).sin_cos();
    let (sin_p, cos_p) = phi.sin_cos();
    let e_iphi = Complex::new(cos_p, sin_p);
    [
        [Complex::from(cos_ht), e_iphi.scale(sin_ht)],
        [Complex::from(sin_ht), -e_iphi.scale(cos_ht)],
    ]
}

fn projector2<T: Scalar>(u: &[Complex<T>; 2]) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(2, |i, j| u[i] * u[j].conj())
}

/// `Σ p_i S(ρ_i)` over both outcomes of measuring `measured` along `(θ, φ)`.
///
/// The unnormalized conditional block of the kept qubit after projecting the
/// measured qubit onto spinor `u` is `M_{a,a'} = Σ_{b,b'} ū_b ρ_{ab,a'b'} u_{b'}`,
/// with `p = Tr M`; its 2x2 eigenvalues feed the binary entropy directly.
#[allow(clippy::needless_range_loop)]
fn conditional_entropy_kernel<T: Scalar>(
    rho: &ComplexMatrix<T>,
    theta: T,
    phi: T,
    measured: usize,
) -> T {
    let mut total = T::zero();
    for u in spinors(theta, phi) {
        let mut block = [[Complex::new(T::zero(), T::zero()); 2]; 2];
        for a in 0..2 {
            for ap in 0..2 {
                let mut acc = Complex::new(T::zero(), T::zero());
                for b in 0..2 {
                    for bp in 0..2 {
                        let (i, j) = if measured == 1 {
                            (2 * a + b, 2 * ap + bp)
                        } else {
                            (2 * b + a, 2 * bp + ap)
                        };
                        acc += u[b].conj() * rho[(i, j)] * u[bp];
                    }
                }
                block[a][ap] = acc;
            }
        }
        let p = block[0][0].re + block[1][1].re;
        if p < T::tolerance(NEGLIGIBLE_PROBABILITY) {
            continue;
        }
        let a = block[0][0].re / p;
        let d = block[1][1].re / p;
        let off = block[0][1].norm() / p;
        let mean = (a + d) * T::real(0.5);
        let radius = ((a - d) * T::real(0.5)).hypot(off);
        total += p * (entropy_term(mean - radius) + entropy_term(mean + radius));
    }
    total
}

/// Folds `(θ, φ)` into `θ ∈ [0, π]`, `φ ∈ [0, 2π)` using the identity
/// `n(θ, φ) = n(2π - θ, φ + π)` of the Bloch map.
fn canonical_angles<T: Scalar>(theta: T, phi: T) -> (T, T) {
    let tau = T::TAU();
    let wrap = |x: T| {
        let w = x - (x / tau).floor() * tau;
        // Guard against w == tau from rounding.
        if w >= tau {
            w - tau
        } else {
            w
        }
    };
    let mut t = wrap(theta);
    let mut p = phi;
    if t > T::PI() {
        t = tau - t;
        p += T::PI();
    }
    (t, wrap(p))
}

/// Minimizes `f` over two unconstrained variables with the standard
/// Nelder-Mead moves (reflect 1, expand 2, contract 1/2, shrink 1/2).
/// Stops once the simplex diameter and value spread are both within
/// tolerance, or after `max_iters`.
fn nelder_mead_2d<T: Scalar>(
    f: &mut impl FnMut(T, T) -> T,
    start: (T, T),
    step: (T, T),
    fn_tol: T,
    x_tol: T,
    max_iters: usize,
) -> (T, (T, T)) {
    let mut simplex = [
        start,
        (start.0 + step.0, start.1),
        (start.0, start.1 + step.1),
    ];
    let mut values = simplex.map(|(t, p)| f(t, p));

    let half = T::real(0.5);
    let two = T::real(2.0);
    for _ in 0..max_iters {
        // Order: best, middle, worst.
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| {
            (values[i], simplex[i].0, simplex[i].1)
                .partial_cmp(&(values[j], simplex[j].0, simplex[j].1))
                .expect("finite objective values")
        });
        simplex = [simplex[order[0]], simplex[order[1]], simplex[order[2]]];
        values = [values[order[0]], values[order[1]], values[order[2]]];

        let diameter = simplex
            .iter()
            .flat_map(|a| simplex.iter().map(move |b| (a.0 - b.0).hypot(a.1 - b.1)))
            .fold(T::zero(), T::max);
        if diameter <= x_tol && (values[2] - values[0]).abs() <= fn_tol {
            break;
        }

        let centroid = (
            (simplex[0].0 + simplex[1].0) * half,
            (simplex[0].1 + simplex[1].1) * half,
        );
        let worst = simplex[2];
        let reflected = (
            centroid.0 + (centroid.0 - worst.0),
            centroid.1 + (centroid.1 - worst.1),
        );
        let f_reflected = f(reflected.0, reflected.1);

        if f_reflected < values[0] {
            let expanded = (
                centroid.0 + two * (centroid.0 - worst.0),
                centroid.1 + two * (centroid.1 - worst.1),
            );
            let f_expanded = f(expanded.0, expanded.1);
            if f_expanded < f_reflected {
                simplex[2] = expanded;
                values[2] = f_expanded;
            } else {
                simplex[2] = reflected;
                values[2] = f_reflected;
            }
        } else if f_reflected < values[1] {
            simplex[2] = reflected;
            values[2] = f_reflected;
        } else {
            let contracted = if f_reflected < values[2] {
                (
                    centroid.0 + half * (reflected.0 - centroid.0),
                    centroid.1 + half * (reflected.1 - centroid.1),
                )
            } else {
                (
                    centroid.0 + half * (worst.0 - centroid.0),
                    centroid.1 + half * (worst.1 - centroid.1),
                )
            };
            let f_contracted = f(contracted.0, contracted.1);
            if f_contracted < values[2].min(f_reflected) {
                simplex[2] = contracted;
                values[2] = f_contracted;
            } else {
                for k in 1..3 {
                    simplex[k] = (
                        simplex[0].0 + half * (simplex[k].0 - simplex[0].0),
                        simplex[0].1 + half * (simplex[k].1 - simplex[0].1),
                    );
                    values[k] = f(simplex[k].0, simplex[k].1);
                }
            }
        }
    }

    let mut best = 0;
    for k in 1..3 {
        if values[k] < values[best] {
            best = k;
        }
    }
    (values[best], simplex[best])
}

/// Closed-form Werner discord, used as an oracle in tests:
/// `(1-λ)/4·log₂(1-λ) + (1+3λ)/4·log₂(1+3λ) - (1+λ)/2·log₂(1+λ)`.
#[cfg(test)]
pub(crate) fn werner_discord_closed_form(lambda: f64) -> f64 {
    let term = |w: f64, x: f64| if x <= 0.0 { 0.0 } else { w * x.log2() };
    term((1.0 - lambda) / 4.0, 1.0 - lambda) + term((1.0 + 3.0 * lambda) / 4.0, 1.0 + 3.0 * lambda)
        - term((1.0 + lambda) / 2.0, 1.0 + lambda)
}
