//! Recovering weights from their pair sums.
//!
//! Two independent routes invert `w -> pair_sums(w)`.
//!
//! The power-sum route converts the pair-sum power sums
//! `q_k = Σ_{i<j} (N_i + N_j)^k` into the weight power sums `p_k = Σ N_i^k`
//! through the exact identity
//!
//! ```text
//! q_k = (d - 2^(k-1)) p_k + (1/2) Σ_{m=1}^{k-1} C(k,m) p_{k-m} p_m,
//! ```
//!
//! then runs Newton's identities to the elementary symmetric functions and
//! factors the resulting monic integer polynomial. Each step is forced, so a
//! solution is unique whenever the ladder never divides by zero; the divisor
//! `d - 2^(k-1)` vanishes for some `k <= d` exactly when `d` is a power of
//! two, and those are the only `d` where distinct solutions can coexist.
//!
//! The identity is frequently miswritten with coefficient `d - 2^k`; both
//! readings are evaluated by [`verify_appendix_identity`] so the failure of
//! the miswritten form is observable. The `k = 1` case `q_1 = (d-1) p_1`
//! (every weight occurs in `d - 1` pairs) already separates them.
//!
//! The backtracking route sorts the multiset and uses its combinatorial
//! rigidity: the two smallest sums are `N_1+N_2` and `N_1+N_3`, and once a
//! position for `N_2+N_3` is chosen the rest of the placement is forced
//! greedily. It enumerates every solution, including ones that fail the
//! coprimality or strictness conventions; candidates carry those flags.
//!
//! [`find_collisions`] searches a bounded box exhaustively for distinct
//! tuples sharing a full pair-sum multiset, the obstruction that makes the
//! power-of-two case genuinely ambiguous.

use crate::weights::{IntegerMultiset, PairSumMultiset, WeightVector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::hash::{Hash, Hasher};
use thiserror::Error;

// Exact integers serialize as decimal strings; the digit-limb encoding the
// bigint crate would otherwise emit is useless to JSON consumers.
fn bigint_decimal<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

fn bigints_decimal<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|n| n.to_string()))
}

pub type Result<T> = std::result::Result<T, ReconstructError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error(
        "PowerOfTwoD({d}): the power-sum ladder divides by d - 2^(k-1), which vanishes \
         when d is a power of two; use the backtracking method instead"
    )]
    PowerOfTwoD { d: usize },
    #[error("NoIntegerSolution: no strictly increasing positive integers realize these pair sums")]
    NoIntegerSolution,
}

/// Which reconstruction route produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Newton,
    Backtracking,
    Both,
}

/// A reconstructed weight tuple. Coprimality and strictness are reported, not
/// required; callers that need the conventions filter on the flags.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct WeightCandidate {
    pub weights: Vec<u64>,
    pub pairwise_coprime: bool,
    pub strict: bool,
}

impl WeightCandidate {
    /// Wraps a sorted, strictly increasing tuple and computes its flags.
    pub fn new(weights: Vec<u64>) -> Self {
        debug_assert!(weights.windows(2).all(|p| p[0] < p[1]));
        let pairwise_coprime = (0..weights.len()).all(|i| {
            ((i + 1)..weights.len()).all(|j| weights[i].gcd(&weights[j]) == 1)
        });
        let strict = weights.first().is_some_and(|&w| w > 1);
        WeightCandidate {
            weights,
            pairwise_coprime,
            strict,
        }
    }

    pub fn pair_sums(&self) -> PairSumMultiset {
        PairSumMultiset::of_weights(&self.weights)
    }

    /// Whether the candidate is exactly the given validated vector.
    pub fn matches(&self, w: &WeightVector) -> bool {
        self.weights == w.weights()
    }
}

impl std::fmt::Display for WeightCandidate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// Result of a reconstruction run. Construction re-derives every solution's
/// pair sums and panics on a mismatch, so a result in hand is sound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructionResult {
    pub input: PairSumMultiset,
    pub method: Method,
    pub solutions: Vec<WeightCandidate>,
}

impl ReconstructionResult {
    fn new(input: PairSumMultiset, method: Method, mut solutions: Vec<WeightCandidate>) -> Self {
        solutions.sort();
        solutions.dedup();
        for s in &solutions {
            assert_eq!(
                s.pair_sums(),
                input,
                "internal error: claimed solution {s} does not realize the input sums"
            );
        }
        ReconstructionResult {
            input,
            method,
            solutions,
        }
    }
}

/// `Σ s^k` over the multiset.
pub fn pairsum_power_sum(sums: &PairSumMultiset, k: u32) -> BigInt {
    sums.sums()
        .iter()
        .map(|&s| BigInt::from(s).pow(k))
        .sum()
}

fn power_sum(values: &[u64], k: u32) -> BigInt {
    values.iter().map(|&v| BigInt::from(v).pow(k)).sum()
}

/// Row-`k` binomial coefficients `C(k, 0..=k)`.
fn binomial_row(k: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 0..k {
        let next = &row[m as usize] * BigInt::from(k - m) / BigInt::from(m + 1);
        row.push(next);
    }
    row
}

/// Both readings of the pair-sum power identity, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub d: usize,
    pub k: u32,
    /// `Σ_{i<j} (N_i + N_j)^k`, expanded directly over the pairs.
    #[serde(serialize_with = "bigint_decimal")]
    pub lhs: BigInt,
    /// Right side with coefficient `d - 2^(k-1)`.
    #[serde(serialize_with = "bigint_decimal")]
    pub corrected_rhs: BigInt,
    /// Right side with the frequently quoted coefficient `d - 2^k`.
    #[serde(serialize_with = "bigint_decimal")]
    pub printed_rhs: BigInt,
    pub corrected_holds: bool,
    pub printed_holds: bool,
}

/// Evaluates `Σ_{i<j} (N_i + N_j)^k` against both candidate right-hand sides.
///
/// The left side is expanded pair by pair; the right sides are assembled from
/// the power sums of `values`. No coprimality or distinctness is assumed: the
/// identity is algebraic. Requires `k >= 1` and at least two values.
pub fn verify_appendix_identity(values: &[u64], k: u32) -> IdentityReport {
    assert!(k >= 1, "the identity is stated for k >= 1");
    assert!(values.len() >= 2, "need at least one pair");
    let d = values.len();

    let mut lhs = BigInt::zero();
    for i in 0..d {
        for j in (i + 1)..d {
            lhs += BigInt::from(values[i] + values[j]).pow(k);
        }
    }

    let p: Vec<BigInt> = (0..=k).map(|m| power_sum(values, m)).collect();
    let row = binomial_row(k);
    let mut cross = BigInt::zero();
    for m in 1..k {
        cross += &row[m as usize] * &p[(k - m) as usize] * &p[m as usize];
    }
    let (half, rem) = cross.div_rem(&BigInt::from(2));
    debug_assert!(rem.is_zero(), "the cross term is always even");

    let d_big = BigInt::from(d);
    let corrected_rhs = (&d_big - BigInt::from(2u8).pow(k - 1)) * &p[k as usize] + &half;
    let printed_rhs = (&d_big - BigInt::from(2u8).pow(k)) * &p[k as usize] + &half;

    IdentityReport {
        d,
        k,
        corrected_holds: lhs == corrected_rhs,
        printed_holds: lhs == printed_rhs,
        lhs,
        corrected_rhs,
        printed_rhs,
    }
}

/// Outcome of a batch of randomized identity checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityTrialsSummary {
    pub d: usize,
    pub k: u32,
    pub trials: u32,
    pub max_entry: u64,
    pub seed: u64,
    pub corrected_held: u32,
    pub printed_held: u32,
    /// The first trial's full report, as a concrete exhibit.
    pub sample: Option<IdentityReport>,
}

/// Checks both identity forms on `trials` random positive vectors of length
/// `d` with entries in `1..=max_entry`, reproducibly from `seed`.
///
/// Entries are sampled uniformly with no coprimality or distinctness
/// constraint; the identity is algebraic and must hold for every positive
/// vector. Requires `d >= 2`, `k >= 1`, `max_entry >= 1`.
pub fn identity_trials(
    d: usize,
    k: u32,
    trials: u32,
    seed: u64,
    max_entry: u64,
) -> IdentityTrialsSummary {
    assert!(d >= 2 && k >= 1 && max_entry >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut corrected_held = 0;
    let mut printed_held = 0;
    let mut sample = None;
    for _ in 0..trials {
        let values: Vec<u64> = (0..d).map(|_| rng.random_range(1..=max_entry)).collect();
        let report = verify_appendix_identity(&values, k);
        if report.corrected_holds {
            corrected_held += 1;
        }
        if report.printed_holds {
            printed_held += 1;
        }
        sample.get_or_insert(report);
    }
    IdentityTrialsSummary {
        d,
        k,
        trials,
        max_entry,
        seed,
        corrected_held,
        printed_held,
        sample,
    }
}

/// The weight power sums `p_0..p_d` recovered from pair-sum power sums.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerSumLadder {
    pub d: usize,
    /// `p[k] = Σ N_i^k` for `k = 0..=d`; `p[0] = d`.
    #[serde(serialize_with = "bigints_decimal")]
    pub p: Vec<BigInt>,
}

/// Solves the identity for `p_1..p_d` in turn, exactly.
///
/// Fails with [`ReconstructError::PowerOfTwoD`] when `d` is a power of two
/// (zero divisor at `k = log2(d) + 1`) and with `NoIntegerSolution` when some
/// `p_k` comes out non-integral or non-positive, which certifies that no
/// positive integer tuple realizes the input.
pub fn power_sum_ladder(sums: &PairSumMultiset) -> Result<PowerSumLadder> {
    let d = sums.declared_d();
    if d.is_power_of_two() {
        return Err(ReconstructError::PowerOfTwoD { d });
    }
    let mut p: Vec<BigInt> = vec![BigInt::from(d)];
    for k in 1..=(d as u32) {
        let q_k = pairsum_power_sum(sums, k);
        let row = binomial_row(k);
        let mut cross = BigInt::zero();
        for m in 1..k {
            cross += &row[m as usize] * &p[(k - m) as usize] * &p[m as usize];
        }
        let (half, rem) = cross.div_rem(&BigInt::from(2));
        debug_assert!(rem.is_zero());
        let divisor = BigInt::from(d) - BigInt::from(2u8).pow(k - 1);
        debug_assert!(!divisor.is_zero());
        let (p_k, rem) = (q_k - half).div_rem(&divisor);
        if !rem.is_zero() || !p_k.is_positive() {
            return Err(ReconstructError::NoIntegerSolution);
        }
        p.push(p_k);
    }
    Ok(PowerSumLadder { d, p })
}

/// Newton's identities: elementary symmetric functions `e_0..e_d` from the
/// ladder. Integrality and positivity are forced for genuine weight tuples;
/// their failure certifies `NoIntegerSolution`.
fn elementary_symmetric(ladder: &PowerSumLadder) -> Result<Vec<BigInt>> {
    let d = ladder.d;
    let mut e: Vec<BigInt> = vec![BigInt::one()];
    for j in 1..=d {
        let mut acc = BigInt::zero();
        for m in 1..=j {
            let term = &e[j - m] * &ladder.p[m];
            if m % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (e_j, rem) = acc.div_rem(&BigInt::from(j));
        if !rem.is_zero() || !e_j.is_positive() {
            return Err(ReconstructError::NoIntegerSolution);
        }
        e.push(e_j);
    }
    Ok(e)
}

/// Divides a monic integer polynomial (coefficients by ascending power) by
/// `x - r`, returning the quotient and remainder.
fn synthetic_division(coeffs: &[BigInt], r: u64) -> (Vec<BigInt>, BigInt) {
    let deg = coeffs.len() - 1;
    let r_big = BigInt::from(r);
    let mut quotient = vec![BigInt::zero(); deg];
    let mut carry = coeffs[deg].clone();
    for i in (0..deg).rev() {
        quotient[i] = carry.clone();
        carry = &coeffs[i] + &r_big * &carry;
    }
    (quotient, carry)
}

/// Extracts `d` strictly increasing positive integer roots of the monic
/// polynomial with the given elementary symmetric functions, or fails.
fn integer_roots(e: &[BigInt], max_sum: u64) -> Result<Vec<u64>> {
    let d = e.len() - 1;
    // coeffs[i] is the coefficient of x^i: (-1)^(d-i) e_{d-i}.
    let mut coeffs: Vec<BigInt> = (0..=d)
        .map(|i| {
            let ej = &e[d - i];
            if (d - i) % 2 == 0 {
                ej.clone()
            } else {
                -ej
            }
        })
        .collect();
    let mut roots: Vec<u64> = Vec::with_capacity(d);
    let mut lo: u64 = 1;
    while coeffs.len() > 1 {
        let deg = (coeffs.len() - 1) as u64;
        // Remaining roots sum to -[x^(deg-1)]; the smallest is at most the mean.
        let sum = -&coeffs[coeffs.len() - 2];
        if !sum.is_positive() {
            return Err(ReconstructError::NoIntegerSolution);
        }
        let mean = (&sum / BigInt::from(deg))
            .to_u64()
            .ok_or(ReconstructError::NoIntegerSolution)?;
        // Every root of a genuine tuple is below the largest pair sum.
        let bound = mean.min(max_sum);
        let constant = coeffs[0].clone();
        if constant.is_zero() {
            return Err(ReconstructError::NoIntegerSolution);
        }
        let mut found = None;
        for r in lo..=bound {
            if (&constant % BigInt::from(r)).is_zero() {
                let (quotient, remainder) = synthetic_division(&coeffs, r);
                if remainder.is_zero() {
                    coeffs = quotient;
                    found = Some(r);
                    break;
                }
            }
        }
        match found {
            Some(r) => {
                roots.push(r);
                lo = r + 1; // roots must be strictly increasing
            }
            None => return Err(ReconstructError::NoIntegerSolution),
        }
    }
    Ok(roots)
}

/// Power-sum reconstruction. Returns the unique solution when one exists.
///
/// The input must have non-power-of-two `declared_d`; the solution, when it
/// exists, is forced at every step, which is the uniqueness argument. The
/// recovered tuple is verified against the input multiset before it is
/// returned, so for oversized inputs (`d >= 4`) whose first `d` power sums
/// accidentally match a tuple, the mismatch is caught and reported as
/// `NoIntegerSolution`.
pub fn reconstruct_newton(sums: &PairSumMultiset) -> Result<ReconstructionResult> {
    let ladder = power_sum_ladder(sums)?;
    let e = elementary_symmetric(&ladder)?;
    let roots = integer_roots(&e, sums.max())?;
    let candidate = WeightCandidate::new(roots);
    if candidate.pair_sums() != *sums {
        return Err(ReconstructError::NoIntegerSolution);
    }
    Ok(ReconstructionResult::new(
        sums.clone(),
        Method::Newton,
        vec![candidate],
    ))
}

/// Multiset residual used by the greedy placement.
struct Residual {
    counts: BTreeMap<u64, usize>,
}

impl Residual {
    fn new(values: &[u64]) -> Self {
        let mut counts = BTreeMap::new();
        for &v in values {
            *counts.entry(v).or_insert(0) += 1;
        }
        Residual { counts }
    }

    fn remove_one(&mut self, value: u64) -> bool {
        match self.counts.get_mut(&value) {
            Some(c) => {
                *c -= 1;
                if *c == 0 {
                    self.counts.remove(&value);
                }
                true
            }
            None => false,
        }
    }

    fn smallest(&self) -> Option<u64> {
        self.counts.keys().next().copied()
    }

    fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

/// Combinatorial reconstruction; returns every solution.
///
/// For `d = 2` the single sum `s` splits as every pair `(a, s-a)` with
/// `0 < a < s-a`, all `⌊(s-1)/2⌋` of them. For `d >= 3` the two smallest
/// sums are `N_1+N_2` and `N_1+N_3`; branching over the value of `N_2+N_3`
/// fixes the first three weights (total parity prunes half the branches),
/// and each later weight is forced: the smallest unconsumed sum must be
/// `N_1 + N_next`. A branch dies when a forced sum is missing.
pub fn reconstruct_backtracking(
    sums: &PairSumMultiset,
    require_coprime: bool,
) -> ReconstructionResult {
    let d = sums.declared_d();
    let mut solutions: BTreeSet<Vec<u64>> = BTreeSet::new();

    if d == 2 {
        let s = sums.sums()[0];
        for a in 1..=((s - 1) / 2) {
            solutions.insert(vec![a, s - a]);
        }
    } else {
        let sorted = sums.sums();
        let (s0, s1) = (sorted[0], sorted[1]);
        let mut tried: BTreeSet<u64> = BTreeSet::new();
        for t in 2..sorted.len() {
            let st = sorted[t];
            if !tried.insert(st) {
                continue;
            }
            // s0 + s1 + st = 2(N_1 + N_2 + N_3) must be even.
            let twice_n1 = s0 as i128 + s1 as i128 - st as i128;
            if twice_n1 <= 0 || twice_n1 % 2 != 0 {
                continue;
            }
            let n1 = (twice_n1 / 2) as u64;
            let (n2, n3) = (s0 - n1, s1 - n1);
            if !(n1 < n2 && n2 < n3) {
                continue;
            }
            let mut residual = Residual::new(sorted);
            for used in [s0, s1, st] {
                assert!(residual.remove_one(used));
            }
            let mut weights = vec![n1, n2, n3];
            let mut alive = true;
            while alive && weights.len() < d {
                let Some(smallest) = residual.smallest() else {
                    alive = false;
                    break;
                };
                // The smallest unconsumed sum must be N_1 + N_next.
                if smallest <= n1 {
                    alive = false;
                    break;
                }
                let next = smallest - n1;
                if next <= *weights.last().expect("nonempty") {
                    alive = false;
                    break;
                }
                for &existing in &weights {
                    match existing.checked_add(next) {
                        Some(sum) if residual.remove_one(sum) => {}
                        _ => {
                            alive = false;
                            break;
                        }
                    }
                }
                weights.push(next);
            }
            if alive && residual.is_empty() {
                solutions.insert(weights);
            }
        }
    }

    let candidates: Vec<WeightCandidate> = solutions
        .into_iter()
        .map(WeightCandidate::new)
        .filter(|c| !require_coprime || c.pairwise_coprime)
        .collect();
    ReconstructionResult::new(sums.clone(), Method::Backtracking, candidates)
}

/// A set of distinct tuples sharing one pair-sum multiset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollisionGroup {
    pub pair_sums: PairSumMultiset,
    pub members: Vec<WeightCandidate>,
}

fn multiset_hash(sums: &[u64]) -> u64 {
    // Collisions are resolved by exact regrouping; determinism within a run
    // is all that is required of the hash.
    let mut hasher = std::collections::hash_map::DefaultHasher::new();
    sums.hash(&mut hasher);
    hasher.finish()
}

fn for_each_tuple(
    min_weight: u64,
    max_weight: u64,
    d: usize,
    first: u64,
    require_coprime: bool,
    f: &mut impl FnMut(&[u64]),
) {
    fn recurse(
        tuple: &mut Vec<u64>,
        d: usize,
        max_weight: u64,
        require_coprime: bool,
        f: &mut impl FnMut(&[u64]),
    ) {
        if tuple.len() == d {
            f(tuple);
            return;
        }
        let remaining = (d - tuple.len()) as u64;
        let last = *tuple.last().expect("seeded with the first weight");
        for next in (last + 1)..=(max_weight.saturating_sub(remaining - 1)) {
            if require_coprime && tuple.iter().any(|&w| w.gcd(&next) != 1) {
                continue;
            }
            tuple.push(next);
            recurse(tuple, d, max_weight, require_coprime, f);
            tuple.pop();
        }
    }
    debug_assert!(first >= min_weight);
    let mut tuple = vec![first];
    recurse(&mut tuple, d, max_weight, require_coprime, f);
}

/// Exhaustive search for pair-sum collisions among strictly increasing
/// `d`-tuples with entries bounded by `max_weight`.
///
/// The scan is sharded over the smallest weight and hashes each tuple's sum
/// multiset; only hash classes that appear at least twice are regrouped
/// exactly, so memory stays proportional to the number of near-collisions.
/// Groups and members are returned in sorted order.
pub fn find_collisions(
    d: usize,
    max_weight: u64,
    require_coprime: bool,
    require_strict: bool,
) -> Vec<CollisionGroup> {
    if d < 2 {
        return Vec::new();
    }
    let min_weight = if require_strict { 2 } else { 1 };
    if max_weight < min_weight + d as u64 - 1 {
        return Vec::new();
    }
    let firsts: Vec<u64> = (min_weight..=(max_weight - d as u64 + 1)).collect();

    // Phase 1: count sum-multiset hashes.
    let counts: HashMap<u64, u32> = firsts
        .par_iter()
        .map(|&first| {
            let mut local: HashMap<u64, u32> = HashMap::new();
            let mut sums_buf: Vec<u64> = Vec::new();
            for_each_tuple(min_weight, max_weight, d, first, require_coprime, &mut |t| {
                sums_buf.clear();
                for i in 0..d {
                    for j in (i + 1)..d {
                        sums_buf.push(t[i] + t[j]);
                    }
                }
                sums_buf.sort_unstable();
                *local.entry(multiset_hash(&sums_buf)).or_insert(0) += 1;
            });
            local
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let repeated: HashSet<u64> = counts
        .into_iter()
        .filter_map(|(h, c)| (c >= 2).then_some(h))
        .collect();

    // Phase 2: regroup exactly, only for candidate hashes.
    let groups: BTreeMap<IntegerMultiset, Vec<Vec<u64>>> = firsts
        .par_iter()
        .map(|&first| {
            let mut local: BTreeMap<IntegerMultiset, Vec<Vec<u64>>> = BTreeMap::new();
            let mut sums_buf: Vec<u64> = Vec::new();
            for_each_tuple(min_weight, max_weight, d, first, require_coprime, &mut |t| {
                sums_buf.clear();
                for i in 0..d {
                    for j in (i + 1)..d {
                        sums_buf.push(t[i] + t[j]);
                    }
                }
                sums_buf.sort_unstable();
                if repeated.contains(&multiset_hash(&sums_buf)) {
                    local
                        .entry(IntegerMultiset::new(sums_buf.iter().copied()))
                        .or_default()
                        .push(t.to_vec());
                }
            });
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, mut v) in b {
                a.entry(k).or_default().append(&mut v);
            }
            a
        });

    groups
        .into_iter()
        .filter(|(_, members)| members.len() >= 2)
        .map(|(_, mut members)| {
            members.sort();
            CollisionGroup {
                pair_sums: PairSumMultiset::of_weights(&members[0]),
                members: members.into_iter().map(WeightCandidate::new).collect(),
            }
        })
        .map(|g| {
            debug_assert!(g
                .members
                .iter()
                .all(|m| m.pair_sums() == g.pair_sums));
            g
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sums(raw: &[i64]) -> PairSumMultiset {
        PairSumMultiset::from_sums(raw).unwrap()
    }

    #[test]
    fn pair_sum_power_sums_of_8_10_12() {
        let s = sums(&[8, 10, 12]);
        assert_eq!(pairsum_power_sum(&s, 1), BigInt::from(30));
        assert_eq!(pairsum_power_sum(&s, 2), BigInt::from(308));
        assert_eq!(pairsum_power_sum(&s, 3), BigInt::from(3240));
    }

    #[test]
    fn identity_forms_on_3_5_7() {
        let r1 = verify_appendix_identity(&[3, 5, 7], 1);
        assert_eq!(r1.lhs, BigInt::from(30));
        assert_eq!(r1.corrected_rhs, BigInt::from(30)); // (d-1) p_1 = 2 * 15
        assert_eq!(r1.printed_rhs, BigInt::from(15));
        assert!(r1.corrected_holds && !r1.printed_holds);

        let r2 = verify_appendix_identity(&[3, 5, 7], 2);
        assert_eq!(r2.lhs, BigInt::from(308));
        assert_eq!(r2.corrected_rhs, BigInt::from(308)); // 83 + 225
        assert_eq!(r2.printed_rhs, BigInt::from(142)); // -83 + 225
        assert!(r2.corrected_holds && !r2.printed_holds);
    }

    #[test]
    fn printed_form_fails_already_at_d2_k1() {
        let r = verify_appendix_identity(&[3, 5], 1);
        assert_eq!(r.lhs, BigInt::from(8));
        assert_eq!(r.corrected_rhs, BigInt::from(8)); // (2 - 1)(3 + 5)
        assert_eq!(r.printed_rhs, BigInt::from(0)); // (2 - 2)(3 + 5)
        assert!(r.corrected_holds && !r.printed_holds);
    }

    #[test]
    fn corrected_identity_holds_with_repeats_and_shared_factors() {
        for values in [&[2u64, 2, 2][..], &[4, 6, 8, 10], &[1, 1, 5, 9, 11]] {
            for k in 1..=6 {
                let r = verify_appendix_identity(values, k);
                assert!(r.corrected_holds, "failed for {values:?} k={k}");
            }
        }
    }

    #[test]
    fn ladder_of_8_10_12_is_the_frozen_one() {
        let ladder = power_sum_ladder(&sums(&[8, 10, 12])).unwrap();
        let expect: Vec<BigInt> = [3, 15, 83, 495].into_iter().map(BigInt::from).collect();
        assert_eq!(ladder.p, expect);
    }

    #[test]
    fn newton_recovers_3_5_7() {
        let result = reconstruct_newton(&sums(&[8, 10, 12])).unwrap();
        assert_eq!(result.method, Method::Newton);
        assert_eq!(result.solutions.len(), 1);
        let sol = &result.solutions[0];
        assert_eq!(sol.weights, vec![3, 5, 7]);
        assert!(sol.pairwise_coprime && sol.strict);

        // The intermediate symmetric functions are forced.
        let ladder = power_sum_ladder(&sums(&[8, 10, 12])).unwrap();
        let e = elementary_symmetric(&ladder).unwrap();
        let expect: Vec<BigInt> = [1, 15, 71, 105].into_iter().map(BigInt::from).collect();
        assert_eq!(e, expect);
    }

    #[test]
    fn newton_rejects_half_integer_power_sums() {
        // q_1 = 31 is odd, so p_1 = 31/2 is not an integer.
        assert_eq!(
            reconstruct_newton(&sums(&[8, 10, 13])).unwrap_err(),
            ReconstructError::NoIntegerSolution
        );
    }

    #[test]
    fn newton_refuses_power_of_two_d() {
        assert_eq!(
            reconstruct_newton(&sums(&[54, 66, 70, 86, 90, 102])).unwrap_err(),
            ReconstructError::PowerOfTwoD { d: 4 }
        );
        assert_eq!(
            reconstruct_newton(&sums(&[8])).unwrap_err(),
            ReconstructError::PowerOfTwoD { d: 2 }
        );
    }

    #[test]
    fn backtracking_finds_both_colliding_quadruples() {
        let result = reconstruct_backtracking(&sums(&[54, 66, 70, 86, 90, 102]), false);
        let got: Vec<&[u64]> = result.solutions.iter().map(|s| &s.weights[..]).collect();
        assert_eq!(got, vec![&[17, 37, 49, 53][..], &[25, 29, 41, 61]]);
        assert!(result.solutions.iter().all(|s| s.pairwise_coprime && s.strict));
    }

    #[test]
    fn backtracking_reports_non_coprime_solutions_with_flags() {
        let all = reconstruct_backtracking(&sums(&[8, 10, 12, 14, 16, 18]), false);
        let got: Vec<(&[u64], bool)> = all
            .solutions
            .iter()
            .map(|s| (&s.weights[..], s.pairwise_coprime))
            .collect();
        assert_eq!(
            got,
            vec![(&[2, 6, 8, 10][..], false), (&[3, 5, 7, 11][..], true)]
        );

        let coprime_only = reconstruct_backtracking(&sums(&[8, 10, 12, 14, 16, 18]), true);
        assert_eq!(coprime_only.solutions.len(), 1);
        assert_eq!(coprime_only.solutions[0].weights, vec![3, 5, 7, 11]);
    }

    #[test]
    fn backtracking_d2_lists_every_split() {
        let result = reconstruct_backtracking(&sums(&[8]), false);
        let got: Vec<&[u64]> = result.solutions.iter().map(|s| &s.weights[..]).collect();
        assert_eq!(got, vec![&[1, 7][..], &[2, 6], &[3, 5]]);
        assert_eq!(result.solutions.len(), (8 - 1) / 2);
        assert!(!result.solutions[0].strict);
        assert!(!result.solutions[1].pairwise_coprime);
        assert!(result.solutions[2].pairwise_coprime && result.solutions[2].strict);
    }

    #[test]
    fn backtracking_agrees_with_newton_on_d3() {
        let result = reconstruct_backtracking(&sums(&[8, 10, 12]), false);
        assert_eq!(result.solutions.len(), 1);
        assert_eq!(result.solutions[0].weights, vec![3, 5, 7]);
        // An unrealizable multiset yields no solutions rather than an error.
        let none = reconstruct_backtracking(&sums(&[8, 10, 13]), false);
        assert!(none.solutions.is_empty());
    }

    #[test]
    fn collision_scan_d3_is_empty() {
        assert!(find_collisions(3, 40, false, false).is_empty());
    }

    #[test]
    fn collision_scan_finds_the_documented_quadruple_pair() {
        let groups = find_collisions(4, 61, true, true);
        assert!(!groups.is_empty());
        let target = sums(&[54, 66, 70, 86, 90, 102]);
        let hit = groups.iter().find(|g| g.pair_sums == target).unwrap();
        let members: Vec<&[u64]> = hit.members.iter().map(|m| &m.weights[..]).collect();
        assert_eq!(members, vec![&[17, 37, 49, 53][..], &[25, 29, 41, 61]]);
        // No triple shares one multiset in this box: groups all have size 2.
        assert!(groups.iter().all(|g| g.members.len() == 2));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn newton_round_trips_random_vectors(raw in proptest::collection::vec(2i64..400, 3..4)) {
            if let Ok(w) = WeightVector::validate(&raw, true) {
                let result = reconstruct_newton(&w.pair_sums()).unwrap();
                prop_assert_eq!(result.solutions.len(), 1);
                prop_assert!(result.solutions[0].matches(&w));
            }
        }

        #[test]
        fn backtracking_always_contains_the_source(raw in proptest::collection::vec(2i64..120, 3..6)) {
            if let Ok(w) = WeightVector::validate(&raw, true) {
                let result = reconstruct_backtracking(&w.pair_sums(), false);
                prop_assert!(result.solutions.iter().any(|s| s.matches(&w)));
            }
        }

        #[test]
        fn corrected_identity_is_algebraic(values in proptest::collection::vec(1u64..5000, 2..8), k in 1u32..=6) {
            prop_assert!(verify_appendix_identity(&values, k).corrected_holds);
        }
    }
}
