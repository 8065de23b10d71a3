//! Acceptance suite: one test per exit criterion, each printing a PASS line
//! with its elapsed time (visible with `--nocapture`) and enforcing the
//! stated runtime budget.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;
use std::time::{Duration, Instant};
use wps_spectrum::{
    enumerate_witnesses, hear, length_spectrum, line_spectrum_d2, oracle_stabilizer_orders,
    reconstruct_backtracking, reconstruct_newton, verify_appendix_identity, ClassKind,
    HearVerdict, PairSumMultiset, WeightVector,
};

fn pass(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("[acceptance] {name}: PASS in {elapsed:.2?}");
    assert!(
        elapsed < budget,
        "{name} exceeded its {budget:?} budget: {elapsed:.2?}"
    );
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Ascending strict valid vectors of length `d`, entries `2..=max`.
fn for_each_strict_coprime(d: usize, max: u64, f: &mut impl FnMut(&WeightVector)) {
    fn rec(d: usize, max: u64, acc: &mut Vec<u64>, f: &mut impl FnMut(&WeightVector)) {
        if acc.len() == d {
            let raw: Vec<i64> = acc.iter().map(|&v| v as i64).collect();
            f(&WeightVector::new(&raw).expect("generator emits valid vectors"));
            return;
        }
        let start = acc.last().map_or(2, |&v| v + 1);
        for v in start..=max {
            if acc.iter().all(|&a| gcd(a, v) == 1) {
                acc.push(v);
                rec(d, max, acc, f);
                acc.pop();
            }
        }
    }
    rec(d, max, &mut Vec::with_capacity(d), f);
}

#[test]
fn criterion_1_shared_pair_sums_and_cli_reconstruction() {
    let started = Instant::now();
    let a = WeightVector::new(&[25, 29, 41, 61]).unwrap();
    let b = WeightVector::new(&[17, 37, 49, 53]).unwrap();
    assert_eq!(a.pair_sums(), b.pair_sums());
    assert_eq!(
        a.pair_sums().sums(),
        &[54, 66, 70, 86, 90, 102],
        "the shared multiset has the documented values"
    );

    let out = Command::new(env!("CARGO_BIN_EXE_wps"))
        .args([
            "reconstruct",
            "--sums",
            "54,66,70,86,90,102",
            "--method",
            "backtrack",
            "--format",
            "json",
        ])
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "CLI failed: {out:?}");
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let solutions = doc["result"]["runs"][0]["solutions"].as_array().unwrap();
    let weights: Vec<Vec<u64>> = solutions
        .iter()
        .map(|s| {
            s["weights"]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_u64().unwrap())
                .collect()
        })
        .collect();
    assert_eq!(weights, vec![vec![17, 37, 49, 53], vec![25, 29, 41, 61]]);
    pass(
        "criterion 1 (shared pair sums, CLI reconstruction)",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_two_weight_spectra() {
    let started = Instant::now();
    let mut checked = 0;
    for p in 2i64..=50 {
        for q in (p + 1)..=50 {
            if gcd(p as u64, q as u64) != 1 {
                continue;
            }
            let spec = line_spectrum_d2(p, q, false).unwrap();
            let shape: Vec<(u64, ClassKind)> =
                spec.classes.iter().map(|c| (c.k, c.kind)).collect();
            let pq = (p + q) as u64;
            if p % 2 == 1 && q % 2 == 1 {
                // Lengths {2π/(p+q), π}.
                assert_eq!(
                    shape,
                    vec![(pq, ClassKind::Desirable), (2, ClassKind::Generic)],
                    "odd/odd shape for ({p},{q})"
                );
            } else {
                // Lengths {2π/(p+q), π, 2π}.
                assert_eq!(
                    shape,
                    vec![
                        (pq, ClassKind::Desirable),
                        (2, ClassKind::PolarZ2),
                        (1, ClassKind::Generic),
                    ],
                    "mixed parity shape for ({p},{q})"
                );
            }
            checked += 1;
        }
    }
    assert!(checked > 700, "pair sweep unexpectedly small: {checked}");
    pass(
        "criterion 2 (two-weight spectra, all coprime pairs to 50)",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_3_oracle_equivalence() {
    let started = Instant::now();
    let mut checked = 0usize;
    let mut f = |w: &WeightVector| {
        assert_eq!(
            enumerate_witnesses(w, true).k_values(),
            oracle_stabilizer_orders(w, true),
            "isotropic order sets differ for {w}"
        );
        assert_eq!(
            enumerate_witnesses(w, false).k_values(),
            oracle_stabilizer_orders(w, false),
            "full order sets differ for {w}"
        );
        checked += 1;
    };
    for_each_strict_coprime(3, 30, &mut f);
    for_each_strict_coprime(4, 15, &mut f);
    assert!(checked > 1000, "sweep unexpectedly small: {checked}");
    pass(
        "criterion 3 (gcd enumeration vs divisor-search oracle)",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_4_triples_heard_uniquely() {
    let started = Instant::now();
    let mut checked = 0usize;
    for_each_strict_coprime(3, 40, &mut |w| {
        let report = hear(w);
        assert_eq!(report.verdict, HearVerdict::UniqueWeights, "verdict for {w}");
        assert_eq!(report.heard_pair_sums.as_ref().unwrap(), &w.pair_sums());
        assert!(report.determined_weights[0].matches(w));
        checked += 1;
    });
    assert!(checked > 1000, "sweep unexpectedly small: {checked}");
    pass(
        "criterion 4 (every triple to 40 heard uniquely)",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_5_quadruples_heard_to_two_candidates() {
    let started = Instant::now();
    let mut checked = 0usize;
    for_each_strict_coprime(4, 25, &mut |w| {
        let report = hear(w);
        assert_eq!(
            report.heard_pair_sums.as_ref().unwrap(),
            &w.pair_sums(),
            "full multiset heard for {w}"
        );
        let n = report.determined_weights.len();
        assert!(
            (1..=2).contains(&n),
            "{w} admits {n} candidates, expected at most 2"
        );
        assert!(
            report.determined_weights.iter().any(|c| c.matches(w)),
            "input missing among candidates for {w}"
        );
        checked += 1;
    });
    assert!(checked > 1000, "sweep unexpectedly small: {checked}");
    pass(
        "criterion 5 (every quadruple to 25 heard, at most two candidates)",
        started,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_6_shortest_lengths_condition_pins_pair_sums() {
    let started = Instant::now();
    let mut checked = 0usize;
    // Generator with the spread bound N_d <= 2 N_1 built in.
    fn rec(d: usize, max: u64, acc: &mut Vec<u64>, f: &mut impl FnMut(&WeightVector)) {
        if acc.len() == d {
            let raw: Vec<i64> = acc.iter().map(|&v| v as i64).collect();
            f(&WeightVector::new(&raw).expect("generator emits valid vectors"));
            return;
        }
        let start = acc.last().map_or(2, |&v| v + 1);
        let cap = acc.first().map_or(max, |&n1| max.min(2 * n1));
        for v in start..=cap {
            if acc.iter().all(|&a| gcd(a, v) == 1) {
                acc.push(v);
                rec(d, max, acc, f);
                acc.pop();
            }
        }
    }
    for d in 2..=5 {
        rec(d, 40, &mut Vec::new(), &mut |w: &WeightVector| {
            let sums = w.pair_sums();
            if sums.has_repeats() {
                return;
            }
            let spec = length_spectrum(w);
            let top: Vec<u64> = spec
                .classes
                .iter()
                .take(w.d() * (w.d() - 1) / 2)
                .map(|c| c.k)
                .collect();
            let mut expect = sums.sums().to_vec();
            expect.reverse();
            assert_eq!(top, expect, "top orders are not the pair sums for {w}");
            let min_sum = sums.min();
            for class in spec.exceptional_classes() {
                if class.kind == ClassKind::Undesirable {
                    assert!(
                        class.k < min_sum,
                        "undesirable order {} above minimum pair sum for {w}",
                        class.k
                    );
                }
            }
            checked += 1;
        });
    }
    assert!(checked > 2500, "sweep unexpectedly small: {checked}");
    pass(
        "criterion 6 (narrow-spread spectra list the pair sums first)",
        started,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_7_newton_round_trips_at_scale() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20_260_817);
    let mut sampled = 0usize;
    for &d in &[3usize, 5, 6, 7] {
        let mut done = 0;
        while done < 125 {
            let mut values: Vec<u64> = (0..d).map(|_| rng.random_range(2..=10_000)).collect();
            values.sort_unstable();
            values.dedup();
            if values.len() != d {
                continue;
            }
            let pairwise_coprime = (0..d)
                .all(|i| ((i + 1)..d).all(|j| gcd(values[i], values[j]) == 1));
            if !pairwise_coprime {
                continue;
            }
            let raw: Vec<i64> = values.iter().map(|&v| v as i64).collect();
            let w = WeightVector::new(&raw).unwrap();
            let result = reconstruct_newton(&w.pair_sums()).unwrap();
            assert_eq!(result.solutions.len(), 1, "non-unique answer for {w}");
            assert!(result.solutions[0].matches(&w), "wrong answer for {w}");
            done += 1;
            sampled += 1;
        }
    }
    assert_eq!(sampled, 500);

    // Exhaustive small-triple agreement between the two routes.
    let mut checked = 0usize;
    for_each_strict_coprime(3, 30, &mut |w| {
        let sums = w.pair_sums();
        let newton = reconstruct_newton(&sums).unwrap();
        let back = reconstruct_backtracking(&sums, false);
        assert_eq!(newton.solutions, back.solutions, "route mismatch for {w}");
        checked += 1;
    });
    assert!(checked > 900, "triple sweep unexpectedly small: {checked}");
    pass(
        "criterion 7 (500 random round trips, route agreement on triples)",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_8_identity_forms() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let d = rng.random_range(2usize..=8);
        let k = rng.random_range(1u32..=6);
        let values: Vec<u64> = (0..d).map(|_| rng.random_range(1..=10_000)).collect();
        let report = verify_appendix_identity(&values, k);
        assert!(
            report.corrected_holds,
            "corrected identity failed at d={d}, k={k}, values {values:?}"
        );
        assert!(
            !report.printed_holds,
            "printed form unexpectedly held at d={d}, k={k}, values {values:?}"
        );
    }
    // The smallest separating case: one pair, first power.
    let tiny = verify_appendix_identity(&[2, 1], 1);
    assert!(tiny.corrected_holds && !tiny.printed_holds);
    pass(
        "criterion 8 (corrected identity holds, printed form fails)",
        started,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_9_backtracking_completeness() {
    let started = Instant::now();
    // Every increasing quadruple in the box, conventions not required.
    let mut quadruples: Vec<[u64; 4]> = Vec::new();
    for a in 1u64..=20 {
        for b in (a + 1)..=20 {
            for c in (b + 1)..=20 {
                for e in (c + 1)..=20 {
                    quadruples.push([a, b, c, e]);
                }
            }
        }
    }
    assert_eq!(quadruples.len(), 4845);

    for q in &quadruples {
        let sums = PairSumMultiset::of_weights(q);
        let found: Vec<Vec<u64>> = reconstruct_backtracking(&sums, false)
            .solutions
            .into_iter()
            .map(|c| c.weights)
            .collect();
        let expected = brute_force_quadruples(&sums);
        assert_eq!(found, expected, "solution sets differ for input {q:?}");
    }
    pass(
        "criterion 9 (backtracking equals brute force on all boxes to 20)",
        started,
        Duration::from_secs(300),
    );
}

/// Independent finder: any solution has total `Σ sums / 3` and entries below
/// the largest sum, so scan that box directly.
fn brute_force_quadruples(sums: &PairSumMultiset) -> Vec<Vec<u64>> {
    let total: u64 = sums.sums().iter().sum();
    if total % 3 != 0 {
        return vec![];
    }
    let t = total / 3;
    let cap = sums.max();
    let mut out = Vec::new();
    for a in 1..=(t / 4) {
        for b in (a + 1)..=((t - a) / 3) {
            for c in (b + 1)..=((t - a - b) / 2) {
                let d = t - a - b - c;
                if d <= c || d >= cap {
                    continue;
                }
                let candidate = [a, b, c, d];
                if &PairSumMultiset::of_weights(&candidate) == sums {
                    out.push(candidate.to_vec());
                }
            }
        }
    }
    out
}
