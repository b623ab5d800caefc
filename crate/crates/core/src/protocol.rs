//! The end-to-end procedure: assemble Werner-pair ⊗ channel, apply Alice's
//! joint measurement, analyze Bob's conditional states, and aggregate over
//! outcomes across a sweep of the Werner parameter.
//!
//! Register layout (big-endian): Werner qubits `{0, 1}`, Alice's channel
//! qubits next, Bob's qubits last. Alice measures the leading register
//! (Werner pair + her channel qubits), so a global basis index factors as
//! `measured_index · 4 + bob_index`.

use num_complex::Complex;
use rayon::prelude::*;

use crate::correlations::{quantum_discord_with, DiscordOptions, NEGLIGIBLE_PROBABILITY};
use crate::entanglement::{fidelity_bounds, FidelityBounds};
use crate::linalg::{kron, ComplexMatrix, StateVector};
use crate::states::{werner, ChannelKind, ChannelSpec, DensityMatrix};
use crate::{Error, Result, Scalar};

/// Pre-scan spacing used to bracket a crossover before bisection.
pub const CROSSOVER_PRESCAN_STEP: f64 = 0.02;
/// Bisection stops once the bracket is this narrow.
pub const CROSSOVER_TOL: f64 = 1e-4;

/// The two measurement bases Alice uses, keyed by the measured register size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// 16 vectors on the 4-qubit register measured with 4-qubit channels.
    FourQubit16,
    /// 8 vectors on the 3-qubit register measured with the W channel.
    ThreeQubit8,
}

/// A complete orthonormal basis on Alice's measured register.
#[derive(Clone, Debug)]
pub struct MeasurementBasis<T> {
    kind: BasisKind,
    vectors: Vec<StateVector<T>>,
}

impl<T: Scalar> MeasurementBasis<T> {
    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn vectors(&self) -> &[StateVector<T>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Dimension of the measured register (16 or 8).
    pub fn dim(&self) -> usize {
        self.vectors[0].dim()
    }
}

/// Sign patterns of the 16-element basis: each vector is
/// `1/2 Σ sign·|bits⟩` over four computational kets.
const FOUR_QUBIT_TERMS: [[(usize, f64); 4]; 16] = [
    [(0b0001, 1.0), (0b0010, 1.0), (0b0100, 1.0), (0b1000, 1.0)],
    [(0b0001, -1.0), (0b0010, 1.0), (0b0100, 1.0), (0b1000, -1.0)],
    [(0b0001, -1.0), (0b0010, 1.0), (0b0100, -1.0), (0b1000, 1.0)],
    [(0b0001, -1.0), (0b0010, -1.0), (0b0100, 1.0), (0b1000, 1.0)],
    [(0b1110, 1.0), (0b1101, 1.0), (0b1011, 1.0), (0b0111, 1.0)],
    [(0b1110, -1.0), (0b1101, 1.0), (0b1011, 1.0), (0b0111, -1.0)],
    [(0b1110, -1.0), (0b1101, 1.0), (0b1011, -1.0), (0b0111, 1.0)],
    [(0b1110, -1.0), (0b1101, -1.0), (0b1011, 1.0), (0b0111, 1.0)],
    [(0b0000, 1.0), (0b0011, 1.0), (0b1100, 1.0), (0b1111, 1.0)],
    [(0b0000, 1.0), (0b0011, 1.0), (0b1100, -1.0), (0b1111, -1.0)],
    [(0b0000, 1.0), (0b0011, -1.0), (0b1100, 1.0), (0b1111, -1.0)],
    [(0b0000, -1.0), (0b0011, 1.0), (0b1100, 1.0), (0b1111, -1.0)],
    [(0b0101, 1.0), (0b0110, 1.0), (0b1010, 1.0), (0b1001, 1.0)],
    [(0b0101, -1.0), (0b0110, -1.0), (0b1010, 1.0), (0b1001, 1.0)],
    [(0b0101, 1.0), (0b0110, -1.0), (0b1010, -1.0), (0b1001, 1.0)],
    [(0b0101, 1.0), (0b0110, -1.0), (0b1010, 1.0), (0b1001, -1.0)],
];

/// Sign patterns of the 8-element basis used with the W channel.
const THREE_QUBIT_TERMS: [[(usize, f64); 4]; 8] = [
    [(0b000, 1.0), (0b100, 1.0), (0b011, 1.0), (0b111, 1.0)],
    [(0b000, 1.0), (0b100, 1.0), (0b011, -1.0), (0b111, -1.0)],
    [(0b000, 1.0), (0b100, -1.0), (0b011, 1.0), (0b111, -1.0)],
    [(0b000, -1.0), (0b100, 1.0), (0b011, 1.0), (0b111, -1.0)],
    [(0b001, 1.0), (0b010, 1.0), (0b101, 1.0), (0b110, 1.0)],
    [(0b001, 1.0), (0b010, -1.0), (0b101, -1.0), (0b110, 1.0)],
    [(0b001, 1.0), (0b010, 1.0), (0b101, -1.0), (0b110, -1.0)],
    [(0b001, -1.0), (0b010, 1.0), (0b101, -1.0), (0b110, 1.0)],
];

/// The fixed joint-measurement basis matching a channel: 16 vectors on four
/// qubits for the 4-qubit channels, 8 vectors on three qubits for the W
/// channel. Bit strings read left to right as (Werner 0, Werner 1, Alice
/// channel qubits).
pub fn measurement_basis<T: Scalar>(channel: ChannelKind) -> MeasurementBasis<T> {
    let half = T::real(0.5);
    let build = |dim: usize, table: &[[(usize, f64); 4]]| {
        table
            .iter()
            .map(|terms| {
                let scaled: Vec<(usize, T)> = terms
                    .iter()
                    .map(|&(idx, sign)| (idx, half * T::real(sign)))
                    .collect();
                StateVector::from_real_terms(dim, &scaled).expect("normalized by construction")
            })
            .collect()
    };
    match channel {
        ChannelKind::Cluster4 | ChannelKind::Omega4 => MeasurementBasis {
            kind: BasisKind::FourQubit16,
            vectors: build(16, &FOUR_QUBIT_TERMS),
        },
        ChannelKind::W3 => MeasurementBasis {
            kind: BasisKind::ThreeQubit8,
            vectors: build(8, &THREE_QUBIT_TERMS),
        },
    }
}

/// Which qubit of each conditional two-qubit state gets measured when its
/// discord is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MeasuredQubitRule {
    /// Always measure qubit 0.
    First,
    /// Always measure qubit 1 (the default convention).
    #[default]
    Second,
    /// Take the smaller of the two per-qubit values.
    Min,
}

/// Settings threaded through every protocol computation.
#[derive(Clone, Copy, Debug)]
pub struct ProtocolOptions<T> {
    pub discord: DiscordOptions<T>,
    pub measured_qubit: MeasuredQubitRule,
}

impl<T: Scalar> Default for ProtocolOptions<T> {
    fn default() -> Self {
        Self {
            discord: DiscordOptions::default(),
            measured_qubit: MeasuredQubitRule::default(),
        }
    }
}

/// One measurement outcome: probability, Bob's conditional state, and the
/// correlation figures of that state. Outcomes with negligible probability
/// carry no state or analysis.
#[derive(Clone, Debug)]
pub struct OutcomeRecord<T> {
    pub index: usize,
    pub probability: T,
    pub bob_state: Option<DensityMatrix<T>>,
    pub discord: Option<T>,
    pub bounds: Option<FidelityBounds<T>>,
}

/// Per-λ aggregate of Alice's curves against Bob's outcome averages.
#[derive(Clone, Copy, Debug)]
pub struct SweepRow<T> {
    pub lambda: T,
    pub alice_discord: T,
    pub avg_bob_discord: T,
    pub alice_fidelity_upper: T,
    pub avg_bob_fidelity_upper: T,
    pub avg_bob_fidelity_lower: T,
    pub outcome_count_used: usize,
}

/// Which pair of curves a crossover search compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveSelector {
    Discord,
    FidelityUpper,
}

impl CurveSelector {
    pub fn name(self) -> &'static str {
        match self {
            CurveSelector::Discord => "discord",
            CurveSelector::FidelityUpper => "fidelity_upper",
        }
    }
}

/// `ρ_T = werner(λ) ⊗ |Ψ⟩⟨Ψ|` on the full register (6 qubits for the
/// 4-qubit channels, 5 for the W channel).
pub fn total_state<T: Scalar>(lambda: T, ch: &ChannelSpec<T>) -> Result<DensityMatrix<T>> {
    let alice = werner(lambda)?;
    let m = kron(alice.matrix(), &ch.state.projector())?;
    Ok(DensityMatrix::new_unchecked(m, 2 + ch.num_qubits()))
}

/// Projects Alice's register onto basis vector `index` and returns the
/// outcome probability together with Bob's normalized conditional state.
/// Outcomes with probability at or below `1e-12` report no state.
pub fn conditional_bob_state<T: Scalar>(
    rho_t: &DensityMatrix<T>,
    basis: &MeasurementBasis<T>,
    index: usize,
) -> Result<(T, Option<DensityMatrix<T>>)> {
    if index >= basis.len() {
        return Err(Error::Index(format!(
            "outcome index {index} out of range for a {}-element basis",
            basis.len()
        )));
    }
    let measured_dim = basis.dim();
    if rho_t.matrix().dim() != measured_dim * 4 {
        return Err(Error::Dimension(format!(
            "total state dimension {} does not match measured register {} ⊗ Bob pair",
            rho_t.matrix().dim(),
            measured_dim
        )));
    }

    // Bob block of ⟨b|ρ_T|b⟩: contraction over the nonzero amplitudes of b.
    let vector = &basis.vectors()[index];
    let support: Vec<(usize, Complex<T>)> = (0..measured_dim)
        .filter_map(|j| {
            let amp = vector.amplitude(j);
            (!amp.norm_sqr().is_zero()).then_some((j, amp))
        })
        .collect();
    let rho = rho_t.matrix();
    let mut block = ComplexMatrix::zeros(4);
    for m in 0..4 {
        for n in 0..4 {
            let mut acc = Complex::new(T::zero(), T::zero());
            for &(j, bj) in &support {
                for &(k, bk) in &support {
                    acc += bj.conj() * rho[(j * 4 + m, k * 4 + n)] * bk;
                }
            }
            block[(m, n)] = acc;
        }
    }

    let probability = block.trace().re.max(T::zero());
    if probability <= T::tolerance(NEGLIGIBLE_PROBABILITY) {
        return Ok((probability, None));
    }
    let state = DensityMatrix::new(block.scale_re(T::one() / probability), 2)?;
    Ok((probability, Some(state)))
}

fn discord_under_rule<T: Scalar>(rho: &DensityMatrix<T>, opts: &ProtocolOptions<T>) -> Result<T> {
    match opts.measured_qubit {
        MeasuredQubitRule::First => Ok(quantum_discord_with(rho, 0, &opts.discord)?.value),
        MeasuredQubitRule::Second => Ok(quantum_discord_with(rho, 1, &opts.discord)?.value),
        MeasuredQubitRule::Min => {
            let first = quantum_discord_with(rho, 0, &opts.discord)?.value;
            let second = quantum_discord_with(rho, 1, &opts.discord)?.value;
            Ok(first.min(second))
        }
    }
}

/// Runs the measurement for every outcome of the channel's basis and analyzes
/// each conditional state. Outcomes are independent and evaluated in
/// parallel; the returned order is by outcome index.
pub fn outcomes<T: Scalar>(
    lambda: T,
    ch: &ChannelSpec<T>,
    opts: &ProtocolOptions<T>,
) -> Result<Vec<OutcomeRecord<T>>> {
    let rho_t = total_state(lambda, ch)?;
    let basis = measurement_basis::<T>(ch.kind);
    (0..basis.len())
        .into_par_iter()
        .map(|index| {
            let (probability, bob_state) = conditional_bob_state(&rho_t, &basis, index)?;
            match bob_state {
                None => Ok(OutcomeRecord {
                    index,
                    probability,
                    bob_state: None,
                    discord: None,
                    bounds: None,
                }),
                Some(state) => {
                    let discord = discord_under_rule(&state, opts)?;
                    let bounds = fidelity_bounds(&state)?;
                    Ok(OutcomeRecord {
                        index,
                        probability,
                        bob_state: Some(state),
                        discord: Some(discord),
                        bounds: Some(bounds),
                    })
                }
            }
        })
        .collect()
}

/// Probability-weighted mean discord of Bob's conditional states,
/// `Σ N_i δ(ρ_B^i) / Σ N_i` over the outcomes that actually occur.
pub fn average_discord<T: Scalar>(
    lambda: T,
    ch: &ChannelSpec<T>,
    opts: &ProtocolOptions<T>,
) -> Result<T> {
    let records = outcomes(lambda, ch, opts)?;
    Ok(weighted_average(&records, |r| r.discord))
}

/// Probability-weighted means of the per-outcome fidelity bounds,
/// returned as `(lower, upper)`.
pub fn average_fidelity_bounds<T: Scalar>(
    lambda: T,
    ch: &ChannelSpec<T>,
    opts: &ProtocolOptions<T>,
) -> Result<(T, T)> {
    let records = outcomes(lambda, ch, opts)?;
    let lower = weighted_average(&records, |r| r.bounds.map(|b| b.lower));
    let upper = weighted_average(&records, |r| r.bounds.map(|b| b.upper));
    Ok((lower, upper))
}

fn weighted_average<T: Scalar>(
    records: &[OutcomeRecord<T>],
    value: impl Fn(&OutcomeRecord<T>) -> Option<T>,
) -> T {
    let mut numerator = T::zero();
    let mut denominator = T::zero();
    for record in records {
        if let Some(v) = value(record) {
            numerator += record.probability * v;
            denominator += record.probability;
        }
    }
    if denominator.is_zero() {
        T::zero()
    } else {
        numerator / denominator
    }
}

fn sweep_row<T: Scalar>(
    lambda: T,
    ch: &ChannelSpec<T>,
    opts: &ProtocolOptions<T>,
) -> Result<SweepRow<T>> {
    let records = outcomes(lambda, ch, opts)?;
    let alice = werner(lambda)?;
    let alice_discord = discord_under_rule(&alice, opts)?;
    let alice_bounds = fidelity_bounds(&alice)?;
    Ok(SweepRow {
        lambda,
        alice_discord,
        avg_bob_discord: weighted_average(&records, |r| r.discord),
        alice_fidelity_upper: alice_bounds.upper,
        avg_bob_fidelity_upper: weighted_average(&records, |r| r.bounds.map(|b| b.upper)),
        avg_bob_fidelity_lower: weighted_average(&records, |r| r.bounds.map(|b| b.lower)),
        outcome_count_used: records.iter().filter(|r| r.bob_state.is_some()).count(),
    })
}

/// Evaluates one row per λ on a uniform grid including both endpoints.
/// Rows are independent and computed in parallel, ordered by λ.
pub fn sweep<T: Scalar>(
    ch: &ChannelSpec<T>,
    lambda_min: T,
    lambda_max: T,
    steps: usize,
    opts: &ProtocolOptions<T>,
) -> Result<Vec<SweepRow<T>>> {
    check_lambda_range(lambda_min, lambda_max)?;
    if steps < 2 {
        return Err(Error::Domain(format!(
            "need at least 2 sweep steps, got {steps}"
        )));
    }
    let span = lambda_max - lambda_min;
    let denom = T::from_usize(steps - 1).unwrap();
    let lambdas: Vec<T> = (0..steps)
        .map(|i| {
            if i == steps - 1 {
                lambda_max
            } else {
                lambda_min + span * T::from_usize(i).unwrap() / denom
            }
        })
        .collect();
    lambdas
        .into_par_iter()
        .map(|lambda| sweep_row(lambda, ch, opts))
        .collect()
}

/// Difference `Bob average − Alice value` for the selected curve at one λ.
pub fn curve_gap<T: Scalar>(
    lambda: T,
    ch: &ChannelSpec<T>,
    curve: CurveSelector,
    opts: &ProtocolOptions<T>,
) -> Result<T> {
    match curve {
        CurveSelector::Discord => {
            let bob = average_discord(lambda, ch, opts)?;
            let alice = discord_under_rule(&werner(lambda)?, opts)?;
            Ok(bob - alice)
        }
        CurveSelector::FidelityUpper => {
            let (_, bob) = average_fidelity_bounds(lambda, ch, opts)?;
            let alice = fidelity_bounds(&werner(lambda)?)?.upper;
            Ok(bob - alice)
        }
    }
}

/// Locates the λ where Bob's outcome average crosses Alice's curve.
///
/// A pre-scan at step [`CROSSOVER_PRESCAN_STEP`] brackets sign changes inside
/// `bracket`; the largest-λ change is then bisected down to
/// [`CROSSOVER_TOL`] and the midpoint returned. Errors if no sign change.
pub fn find_crossover<T: Scalar>(
    ch: &ChannelSpec<T>,
    curve: CurveSelector,
    bracket: (T, T),
    opts: &ProtocolOptions<T>,
) -> Result<T> {
    let (lo, hi) = bracket;
    check_lambda_range(lo, hi)?;

    let step = T::real(CROSSOVER_PRESCAN_STEP);
    let mut points = vec![lo];
    let mut k = 1usize;
    loop {
        let x = lo + step * T::from_usize(k).unwrap();
        if x >= hi {
            break;
        }
        points.push(x);
        k += 1;
    }
    points.push(hi);

    let gaps: Vec<T> = points
        .par_iter()
        .map(|&lambda| curve_gap(lambda, ch, curve, opts))
        .collect::<Result<Vec<T>>>()?;

    let pair = (0..points.len() - 1)
        .rev()
        .find(|&i| gaps[i] * gaps[i + 1] <= T::zero())
        .ok_or_else(|| {
            Error::Bracket(format!(
                "{} gap has no sign change in [{lo}, {hi}]",
                curve.name()
            ))
        })?;

    let tol = T::real(CROSSOVER_TOL);
    let (mut a, mut b) = (points[pair], points[pair + 1]);
    let mut gap_a = gaps[pair];
    while b - a > tol {
        let mid = (a + b) * T::real(0.5);
        let gap_mid = curve_gap(mid, ch, curve, opts)?;
        if gap_a * gap_mid <= T::zero() {
            b = mid;
        } else {
            a = mid;
            gap_a = gap_mid;
        }
    }
    Ok((a + b) * T::real(0.5))
}

fn check_lambda_range<T: Scalar>(lo: T, hi: T) -> Result<()> {
    if !(lo >= T::zero() && hi <= T::one() && lo < hi) {
        return Err(Error::Domain(format!(
            "λ range [{lo}, {hi}] must satisfy 0 ≤ min < max ≤ 1"
        )));
    }
    Ok(())
}
