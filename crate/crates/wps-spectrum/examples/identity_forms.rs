//! The closing power-sum identity in its two circulating forms. The form
//! with coefficient d - 2^(k-1) is an algebraic identity; the form with
//! d - 2^k fails on every positive vector, already at d = 2, k = 1.
//!
//! Run with `cargo run --example identity_forms`.

use wps_spectrum::{identity_trials, verify_appendix_identity};

fn main() {
    // A worked case small enough to check by hand:
    // (3+5)^2 + (3+7)^2 + (5+7)^2 = 64 + 100 + 144 = 308.
    let report = verify_appendix_identity(&[3, 5, 7], 2);
    println!(
        "values (3,5,7), k=2: lhs {} | corrected rhs {} | printed rhs {}",
        report.lhs, report.corrected_rhs, report.printed_rhs
    );
    assert!(report.corrected_holds && !report.printed_holds);

    // The separating case needs nothing beyond one pair and k = 1:
    // lhs = a + b, corrected = (2-1)(a+b), printed = (2-2)(a+b) = 0.
    let tiny = verify_appendix_identity(&[2, 1], 1);
    println!(
        "values (2,1), k=1: lhs {} | corrected rhs {} | printed rhs {}",
        tiny.lhs, tiny.corrected_rhs, tiny.printed_rhs
    );
    assert!(tiny.corrected_holds && !tiny.printed_holds);

    // Randomized confirmation across shapes, reproducible by seed. The
    // identity needs no coprimality, distinctness, or ordering.
    for (d, k) in [(2, 1), (3, 2), (5, 4), (8, 6)] {
        let summary = identity_trials(d, k, 100, 7, 10_000);
        println!(
            "d={d}, k={k}: corrected held {}/{}, printed held {}/{}",
            summary.corrected_held, summary.trials, summary.printed_held, summary.trials
        );
        assert_eq!(summary.corrected_held, summary.trials);
        assert_eq!(summary.printed_held, 0);
    }
}
