//! Can you hear the weights? Four verdicts: a triple heard uniquely, a
//! quadruple heard up to a known two-fold ambiguity, a five-weight vector
//! whose spectrum has an unresolved spurious order, and one that satisfies
//! the shortest-lengths condition and is heard uniquely.
//!
//! Run with `cargo run --example hear_weights`.

use wps_spectrum::{check_sufficient_condition, hear, HearVerdict, WeightVector};

fn show(raw: &[i64]) {
    let w = WeightVector::new(raw).expect("example weights are valid");
    let report = hear(&w);
    println!("weights {w}: {}", report.verdict);
    match &report.heard_pair_sums {
        Some(sums) => println!("  heard pair sums {sums}"),
        None => println!("  pair sums not provably recoverable"),
    }
    for entry in &report.per_sum_status {
        println!(
            "  N_{} + N_{} = {}: {}",
            entry.i, entry.j, entry.sum, entry.status
        );
    }
    for c in &report.determined_weights {
        println!(
            "  candidate {c}{}",
            if c.pairwise_coprime { "" } else { "  (not pairwise coprime)" }
        );
    }
    if report.verdict == HearVerdict::Unknown {
        println!("  (an undesirable order falls strictly between pair sums)");
    }
    println!();
}

fn main() {
    // Triples are always heard, and d = 3 reconstruction is unique.
    show(&[3, 5, 7]);

    // Quadruples are heard too, but length-4 tuples can share all pair
    // sums, so the verdict lists every candidate.
    show(&[3, 5, 7, 11]);

    // gcd(23+25, 23+31) = 6 is an achieved order that is neither below the
    // smallest pair sum 5 nor equal to any pair sum.
    show(&[2, 3, 23, 25, 31]);

    // Under the shortest-lengths condition the verdict is always unique
    // for d = 5 (not a power of two).
    let w = WeightVector::new(&[11, 13, 16, 17, 21]).unwrap();
    assert!(check_sufficient_condition(&w).holds);
    show(&[11, 13, 16, 17, 21]);
}
