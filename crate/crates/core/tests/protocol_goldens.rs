//! Frozen per-outcome figures from the first oracle-validated run.
//!
//! The conditional-state path was cross-checked against the literal
//! projector-sandwich route and the discord path against the closed-form and
//! brute-force oracles before these numbers were recorded; they guard
//! against regressions in any part of the pipeline.

use qdiscord::{channel, outcomes, ChannelKind, ProtocolOptions};

// (index, probability, discord, fidelity lower, fidelity upper)
const CLUSTER4_HALF: [(usize, f64, f64, f64, f64); 16] = [
    (0, 0.0937500000, 0.1484020504, 0.5041359762, 0.5082516261),
    (1, 0.0312500000, 0.4121541612, 0.5542113339, 0.6035533906),
    (2, 0.0312500000, 0.4121541612, 0.5542113339, 0.6035533906),
    (3, 0.0937500000, 0.1484020504, 0.5041359762, 0.5082516261),
    (4, 0.0937500000, 0.1484020504, 0.5041359762, 0.5082516261),
    (5, 0.0312500000, 0.4121541612, 0.5542113339, 0.6035533906),
    (6, 0.0312500000, 0.4121541612, 0.5542113339, 0.6035533906),
    (7, 0.0937500000, 0.1484020504, 0.5041359762, 0.5082516261),
    (8, 0.0312500000, 1.0000000000, 1.0000000000, 1.0000000000),
    (9, 0.0312500000, 1.0000000000, 1.0000000000, 1.0000000000),
    (10, 0.0312500000, 1.0000000000, 1.0000000000, 1.0000000000),
    (11, 0.0312500000, 1.0000000000, 1.0000000000, 1.0000000000),
    (12, 0.1562500000, 1.0000000000, 1.0000000000, 1.0000000000),
    (13, 0.0312500000, 1.0000000000, 1.0000000000, 1.0000000000),
    (14, 0.1562500000, 1.0000000000, 1.0000000000, 1.0000000000),
    (15, 0.0312500000, 1.0000000000, 1.0000000000, 1.0000000000),
];

const W3_POINT3: [(usize, f64, f64, f64, f64); 8] = [
    (0, 0.1250000000, 0.5429684889, 0.6229332086, 0.7164291973),
    (1, 0.1250000000, 0.5429684889, 0.6229332086, 0.7164291973),
    (2, 0.1250000000, 0.5429684889, 0.6229332086, 0.7164291973),
    (3, 0.1250000000, 0.5429684889, 0.6229332086, 0.7164291973),
    (4, 0.1250000000, 0.5429684889, 0.6229332086, 0.7164291973),
    (5, 0.1250000000, 0.5429684889, 0.6229332086, 0.7164291973),
    (6, 0.1250000000, 0.5429684889, 0.6229332086, 0.7164291973),
    (7, 0.1250000000, 0.5429684889, 0.6229332086, 0.7164291973),
];

fn check(kind: ChannelKind, lambda: f64, expected: &[(usize, f64, f64, f64, f64)]) {
    let ch = channel::<f64>(kind);
    let records = outcomes(lambda, &ch, &ProtocolOptions::default()).unwrap();
    assert_eq!(records.len(), expected.len());
    for (record, &(index, probability, discord, lower, upper)) in records.iter().zip(expected) {
        assert_eq!(record.index, index);
        assert!(
            (record.probability - probability).abs() < 1e-6,
            "{kind:?} outcome {index}: N {} vs {probability}",
            record.probability
        );
        let d = record.discord.expect("outcome present in the golden run");
        assert!(
            (d - discord).abs() < 1e-6,
            "{kind:?} outcome {index}: discord {d} vs {discord}"
        );
        let bounds = record.bounds.expect("outcome present in the golden run");
        assert!((bounds.lower - lower).abs() < 1e-6);
        assert!((bounds.upper - upper).abs() < 1e-6);
    }
}

#[test]
fn cluster_outcomes_at_half_match_the_golden_run() {
    check(ChannelKind::Cluster4, 0.5, &CLUSTER4_HALF);
}

#[test]
fn w_outcomes_at_point_three_match_the_golden_run() {
    check(ChannelKind::W3, 0.3, &W3_POINT3);
}

#[test]
fn w_outcomes_are_uniform_across_lambda() {
    // The 8-element basis is unbiased against every W-channel total state.
    let ch = channel::<f64>(ChannelKind::W3);
    for lambda in [0.1, 0.6, 0.9] {
        let records = outcomes(lambda, &ch, &ProtocolOptions::default()).unwrap();
        for r in &records {
            assert!(
                (r.probability - 0.125).abs() < 1e-12,
                "λ = {lambda}, outcome {}: N = {}",
                r.index,
                r.probability
            );
        }
    }
}
