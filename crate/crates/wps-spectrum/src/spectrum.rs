//! Length spectra and the hearability decision.
//!
//! Every geodesic class of a weighted projective space has length `2π/k` for
//! an integer `k`:
//!
//! - the generic class, `k = 2` (length `π`) when all weights are odd and
//!   `k = 1` (length `2π`) otherwise;
//! - when some weight is even, a polar class of `Z/2`-fixed geodesics with
//!   `k = 2` (length `π`);
//! - one exceptional class per stabilizer order `k > 2` achieved by an
//!   isotropic witness. Orders equal to a pair sum `N_i + N_j` are the
//!   desirable ones: they contain an isolated geodesic whose length reveals
//!   the pair sum. All other achieved orders are undesirable; their witnesses
//!   have support of size at least two and therefore sustain families of
//!   dimension at least two.
//!
//! Classes with equal `k` are merged into one [`GeodesicClass`] carrying all
//! witnesses; a merged class can be desirable and still carry undesirable
//! witnesses (a coincidence). The classes for `d = 2` follow the classical
//! two-weight classification and are also built by the independent
//! [`line_spectrum_d2`] route so the general machinery can be cross-checked
//! against it.
//!
//! [`hear`] answers whether the pair-sum multiset is recoverable from the
//! weighted length spectrum. An isolated geodesic contributes a sharper wave
//! singularity than a positive-dimensional family only when nothing longer
//! drowns it out, so the analysis is about which stabilizer orders can
//! coincide or interleave:
//!
//! - a pair sum strictly above every undesirable order is heard outright;
//! - a pair sum equal to an undesirable order is still heard: the family
//!   dominates the singularity, but in positive curvature the contributions
//!   cannot cancel, so the length survives (а dominated coincidence);
//! - for `d = 3` and `d = 4` the full multiset is always heard: undesirable
//!   orders are provably below the top sums, and the remaining sums follow by
//!   subtraction from the total;
//! - for other `d` the multiset is declared heard only when every undesirable
//!   order either coincides with a pair sum or sits strictly below the
//!   minimum pair sum; an undesirable order strictly between pair-sum values
//!   is unresolved and yields `Unknown` rather than a guess.
//!
//! When the multiset is heard, the weights themselves are determined through
//! the reconstruction module: uniquely for `d` not a power of two, otherwise
//! as the finite candidate list of the backtracking search.

use crate::reconstruct::{reconstruct_backtracking, reconstruct_newton, WeightCandidate};
use crate::stabilizers::{enumerate_witnesses, StabilizerWitness};
use crate::weights::{PairSumMultiset, WeightError, WeightVector};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, SpectrumError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("NotCoprime({a},{b}): the two weights must be relatively prime")]
    NotCoprime { a: u64, b: u64 },
    #[error("OutOfRange: {message}")]
    OutOfRange { message: String },
}

/// The qualitative type of a geodesic class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassKind {
    /// The principal family present for every weight vector.
    Generic,
    /// Geodesics through the poles, fixed by the antipodal half-turn.
    PolarZ2,
    /// The order is a pair sum; the class contains an isolated geodesic per
    /// realizing pair.
    Desirable,
    /// An achieved order that is not a pair sum.
    Undesirable,
}

impl std::fmt::Display for ClassKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ClassKind::Generic => "generic",
            ClassKind::PolarZ2 => "polar",
            ClassKind::Desirable => "desirable",
            ClassKind::Undesirable => "undesirable",
        })
    }
}

/// One merged length class: every geodesic of length `2π/k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeodesicClass {
    /// Effective order: the length is `2π/k`.
    pub k: u64,
    pub kind: ClassKind,
    /// The pairs `(i, j)` with `N_i + N_j = k`, 1-based, empty unless
    /// desirable.
    pub desirable_pairs: Vec<(usize, usize)>,
    /// Largest witness family dimension; `None` for the generic and polar
    /// classes, whose families are not witness-bounded.
    pub max_family_dimension: Option<u32>,
    pub witnesses: Vec<StabilizerWitness>,
}

impl GeodesicClass {
    /// The length as an exact rational multiple of `2π`: `(1, k)`.
    pub fn length_over_two_pi(&self) -> (u64, u64) {
        (1, self.k)
    }

    /// Human-readable exact length.
    pub fn length_display(&self) -> String {
        match self.k {
            1 => "2π".to_string(),
            2 => "π".to_string(),
            k => format!("2π/{k}"),
        }
    }

    /// Whether some witness of this class is not the isolated pair shape.
    pub fn has_undesirable_witness(&self) -> bool {
        self.witnesses.iter().any(|w| !w.is_singleton_desirable())
    }
}

/// The full length spectrum of one weight vector, classes sorted by
/// decreasing `k` (increasing length).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthSpectrum {
    pub weights: WeightVector,
    pub all_weights_odd: bool,
    pub classes: Vec<GeodesicClass>,
}

impl LengthSpectrum {
    /// Orders achieved by witnesses that are not the isolated pair shape,
    /// including orders that coincide with a pair sum.
    pub fn undesirable_k_values(&self) -> BTreeSet<u64> {
        self.classes
            .iter()
            .filter(|c| c.has_undesirable_witness())
            .map(|c| c.k)
            .collect()
    }

    /// The exceptional classes (every class except generic and polar).
    pub fn exceptional_classes(&self) -> impl Iterator<Item = &GeodesicClass> {
        self.classes
            .iter()
            .filter(|c| matches!(c.kind, ClassKind::Desirable | ClassKind::Undesirable))
    }

    pub fn class_for_k(&self, k: u64) -> Option<&GeodesicClass> {
        self.classes.iter().find(|c| c.k == k)
    }
}

/// The two-weight spectrum, built directly from the classical classification
/// rather than from witness enumeration.
///
/// For coprime `p < q`: both odd gives `{generic π, exceptional 2π/(p+q)}`;
/// mixed parity gives `{generic 2π, polar π, exceptional 2π/(p+q)}`.
/// `allow_weight_one` admits `p = 1`, which models the teardrop-like
/// boundary case and is outside the strict convention.
pub fn line_spectrum_d2(p: i64, q: i64, allow_weight_one: bool) -> Result<LengthSpectrum> {
    let weights =
        WeightVector::validate(&[p, q], !allow_weight_one).map_err(|e| match e {
            WeightError::NotCoprime { a, b, .. } => SpectrumError::NotCoprime { a, b },
            other => SpectrumError::OutOfRange {
                message: other.to_string(),
            },
        })?;
    let (p, q) = (weights.weight(1), weights.weight(2));
    let all_odd = weights.all_odd();

    let mut classes = Vec::new();
    let mut sigma = BTreeMap::new();
    sigma.insert(2, p + q);
    classes.push(GeodesicClass {
        k: p + q,
        kind: ClassKind::Desirable,
        desirable_pairs: vec![(1, 2)],
        max_family_dimension: Some(0),
        witnesses: vec![StabilizerWitness {
            r: 1,
            s1: vec![],
            s2: vec![2],
            sigma_values: sigma,
            k: p + q,
        }],
    });
    if !all_odd {
        classes.push(GeodesicClass {
            k: 2,
            kind: ClassKind::PolarZ2,
            desirable_pairs: vec![],
            max_family_dimension: None,
            witnesses: vec![],
        });
    }
    classes.push(GeodesicClass {
        k: if all_odd { 2 } else { 1 },
        kind: ClassKind::Generic,
        desirable_pairs: vec![],
        max_family_dimension: None,
        witnesses: vec![],
    });

    Ok(LengthSpectrum {
        weights,
        all_weights_odd: all_odd,
        classes,
    })
}

/// Assembles the length spectrum of a validated weight vector from the
/// isotropic witness catalog.
pub fn length_spectrum(w: &WeightVector) -> LengthSpectrum {
    let catalog = enumerate_witnesses(w, true);
    let mut by_k: BTreeMap<u64, Vec<StabilizerWitness>> = BTreeMap::new();
    for witness in catalog.witnesses {
        by_k.entry(witness.k).or_default().push(witness);
    }

    let mut pairs_by_sum: BTreeMap<u64, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 1..=w.d() {
        for j in (i + 1)..=w.d() {
            pairs_by_sum
                .entry(w.weight(i) + w.weight(j))
                .or_default()
                .push((i, j));
        }
    }

    let mut classes: Vec<GeodesicClass> = by_k
        .into_iter()
        .rev()
        .map(|(k, witnesses)| {
            let desirable_pairs = pairs_by_sum.get(&k).cloned().unwrap_or_default();
            let max_dim = witnesses
                .iter()
                .map(|wit| 2 * wit.support_len() as u32 - 2)
                .max();
            GeodesicClass {
                k,
                kind: if desirable_pairs.is_empty() {
                    ClassKind::Undesirable
                } else {
                    ClassKind::Desirable
                },
                desirable_pairs,
                max_family_dimension: max_dim,
                witnesses,
            }
        })
        .collect();

    let all_odd = w.all_odd();
    if !all_odd {
        classes.push(GeodesicClass {
            k: 2,
            kind: ClassKind::PolarZ2,
            desirable_pairs: vec![],
            max_family_dimension: None,
            witnesses: vec![],
        });
    }
    classes.push(GeodesicClass {
        k: if all_odd { 2 } else { 1 },
        kind: ClassKind::Generic,
        desirable_pairs: vec![],
        max_family_dimension: None,
        witnesses: vec![],
    });

    LengthSpectrum {
        weights: w.clone(),
        all_weights_odd: all_odd,
        classes,
    }
}

/// Why the shortest-lengths criterion failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SufficientConditionViolation {
    /// `N_d > 2 N_1`.
    SpreadTooLarge { n1: u64, nd: u64 },
    /// Some pair-sum value occurs more than once.
    RepeatedPairSum { value: u64 },
}

impl std::fmt::Display for SufficientConditionViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SufficientConditionViolation::SpreadTooLarge { n1, nd } => {
                write!(f, "SpreadTooLarge: N_d = {nd} exceeds 2 N_1 = {}", 2 * n1)
            }
            SufficientConditionViolation::RepeatedPairSum { value } => {
                write!(f, "RepeatedPairSum: the pair sum {value} occurs more than once")
            }
        }
    }
}

/// Verdict of [`check_sufficient_condition`], with certificates on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SufficientConditionReport {
    pub holds: bool,
    pub violations: Vec<SufficientConditionViolation>,
}

/// The shortest-lengths criterion: `N_d <= 2 N_1` and no repeated pair sums.
///
/// When it holds, every undesirable order is strictly below the minimum pair
/// sum `N_1 + N_2`, so the `d(d-1)/2` shortest exceptional geodesics are
/// exactly the isolated pair geodesics.
pub fn check_sufficient_condition(w: &WeightVector) -> SufficientConditionReport {
    let mut violations = Vec::new();
    let n1 = w.weight(1);
    let nd = w.weight(w.d());
    if nd > 2 * n1 {
        violations.push(SufficientConditionViolation::SpreadTooLarge { n1, nd });
    }
    let sums = w.pair_sums();
    let mut seen_repeat = BTreeSet::new();
    for pair in sums.sums().windows(2) {
        if pair[0] == pair[1] && seen_repeat.insert(pair[0]) {
            violations.push(SufficientConditionViolation::RepeatedPairSum { value: pair[0] });
        }
    }
    SufficientConditionReport {
        holds: violations.is_empty(),
        violations,
    }
}

/// How one pair sum fares against the undesirable orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PairSumStatus {
    /// Strictly larger than every undesirable order: its geodesic is
    /// strictly shorter than every undesirable family.
    StrictlyShortest,
    /// Equal to an undesirable order; the family dominates the wave
    /// singularity but cannot cancel it, so the length is still heard.
    DominatedCoincidence,
    /// Some undesirable order lies strictly above this sum.
    Ambiguous,
}

impl std::fmt::Display for PairSumStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PairSumStatus::StrictlyShortest => "StrictlyShortest",
            PairSumStatus::DominatedCoincidence => "DominatedCoincidence",
            PairSumStatus::Ambiguous => "Ambiguous",
        })
    }
}

/// Status of a single pair `(i, j)`, `N_i + N_j = sum`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSumEntry {
    pub i: usize,
    pub j: usize,
    pub sum: u64,
    pub status: PairSumStatus,
}

/// Outcome of the weight-determination step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum HearVerdict {
    /// Exactly one candidate, equal to the input weights.
    UniqueWeights,
    /// The heard multiset admits this many tuples (flags on each candidate).
    FinitelyManyCandidates(usize),
    /// The pair-sum multiset is not provably recoverable.
    Unknown,
}

impl std::fmt::Display for HearVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HearVerdict::UniqueWeights => f.write_str("UniqueWeights"),
            HearVerdict::FinitelyManyCandidates(n) => {
                write!(f, "FinitelyManyCandidates({n})")
            }
            HearVerdict::Unknown => f.write_str("Unknown"),
        }
    }
}

/// Answer to "does the length spectrum reveal the pair sums, and then the
/// weights".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HearabilityReport {
    pub weights: WeightVector,
    /// The recovered multiset, absent when the verdict is `Unknown`.
    pub heard_pair_sums: Option<PairSumMultiset>,
    pub per_sum_status: Vec<PairSumEntry>,
    pub determined_weights: Vec<WeightCandidate>,
    pub verdict: HearVerdict,
}

/// Decides hearability of the pair-sum multiset and, when heard, determines
/// the weights via reconstruction.
///
/// `d = 3` and `d = 4` are always heard. Elsewhere the multiset is heard
/// when every undesirable order coincides with a pair sum or sits strictly
/// below the minimum pair sum; an undesirable order strictly between
/// pair-sum values leaves the verdict `Unknown`. `d = 2` has no undesirable
/// orders, so the single sum `p + q` is always heard; like every power of
/// two it yields finitely many candidates rather than uniqueness.
pub fn hear(w: &WeightVector) -> HearabilityReport {
    let spectrum = length_spectrum(w);
    let undesirable: BTreeSet<u64> = spectrum.undesirable_k_values();
    let pair_sums = w.pair_sums();
    let max_undesirable = undesirable.iter().next_back().copied();

    let mut per_sum_status = Vec::new();
    for i in 1..=w.d() {
        for j in (i + 1)..=w.d() {
            let sum = w.weight(i) + w.weight(j);
            let status = if undesirable.contains(&sum) {
                PairSumStatus::DominatedCoincidence
            } else if max_undesirable.is_none_or(|m| sum > m) {
                PairSumStatus::StrictlyShortest
            } else {
                PairSumStatus::Ambiguous
            };
            per_sum_status.push(PairSumEntry { i, j, sum, status });
        }
    }

    let heard = match w.d() {
        3 | 4 => true,
        _ => undesirable
            .iter()
            .all(|&k| k < pair_sums.min() || pair_sums.contains(k)),
    };
    if !heard {
        return HearabilityReport {
            weights: w.clone(),
            heard_pair_sums: None,
            per_sum_status,
            determined_weights: vec![],
            verdict: HearVerdict::Unknown,
        };
    }

    let determined_weights = if w.d().is_power_of_two() {
        reconstruct_backtracking(&pair_sums, false).solutions
    } else {
        let result = reconstruct_newton(&pair_sums)
            .expect("internal error: genuine pair sums must reconstruct");
        result.solutions
    };
    debug_assert!(
        determined_weights.iter().any(|c| c.matches(w)),
        "internal error: the input vector must be among its own candidates"
    );
    let verdict = if determined_weights.len() == 1 && determined_weights[0].matches(w) {
        HearVerdict::UniqueWeights
    } else {
        HearVerdict::FinitelyManyCandidates(determined_weights.len())
    };

    HearabilityReport {
        weights: w.clone(),
        heard_pair_sums: Some(pair_sums),
        per_sum_status,
        determined_weights,
        verdict,
    }
}
