//! Inverting the pair-sum map by both routes: the power-sum ladder with
//! integer root extraction, and the turnpike-style backtracking search.
//!
//! Run with `cargo run --example reconstruct_sums`.

use wps_spectrum::{
    power_sum_ladder, reconstruct_backtracking, reconstruct_newton, PairSumMultiset,
    ReconstructError,
};

fn main() {
    // d = 3: the ladder determines every weight power sum, so the answer
    // is unique over all positive integer tuples.
    let sums = PairSumMultiset::from_sums(&[8, 10, 12]).unwrap();
    let ladder = power_sum_ladder(&sums).unwrap();
    println!("sums {sums}: power sums p_0..p_3 = {:?}", ladder.p);
    let unique = reconstruct_newton(&sums).unwrap();
    println!("  unique solution {}", unique.solutions[0]);

    // Inputs that are not pair sums of anything fail with a certificate,
    // not a guess.
    let bad = PairSumMultiset::from_sums(&[8, 10, 13]).unwrap();
    match reconstruct_newton(&bad) {
        Err(ReconstructError::NoIntegerSolution) => {
            println!("sums {bad}: no integer solution (ladder is exact)")
        }
        other => panic!("unexpected outcome {other:?}"),
    }

    // d = 4 is a power of two: the ladder has a zero divisor and genuinely
    // distinct solutions can share all pair sums. Backtracking enumerates
    // every one.
    let shared = PairSumMultiset::from_sums(&[54, 66, 70, 86, 90, 102]).unwrap();
    match power_sum_ladder(&shared) {
        Err(e @ ReconstructError::PowerOfTwoD { .. }) => println!("sums {shared}: {e}"),
        other => panic!("unexpected outcome {other:?}"),
    }
    let all = reconstruct_backtracking(&shared, false);
    println!("  backtracking finds {} solutions:", all.solutions.len());
    for c in &all.solutions {
        println!("    {c}  pairwise_coprime={}", c.pairwise_coprime);
    }

    // A single sum is the fully ambiguous base case.
    let tiny = PairSumMultiset::from_sums(&[8]).unwrap();
    let splits = reconstruct_backtracking(&tiny, false);
    println!(
        "sums {tiny}: {} splits: {}",
        splits.solutions.len(),
        splits
            .solutions
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
}
