//! Weight vectors and pair-sum multisets.
//!
//! A weight vector is a strictly increasing list of pairwise coprime positive
//! integers `N_1 < N_2 < ... < N_d` with `d >= 2`. These are the twist numbers
//! of a circle action on the unit sphere; everything downstream (stabilizer
//! orders, geodesic lengths, reconstruction) is a function of them.
//!
//! The multiset of pair sums `{ N_i + N_j : i < j }` plays the role of the
//! primary spectral data: each pair sum is realized as the stabilizer order of
//! an isolated exceptional geodesic of length `2π/(N_i + N_j)`.
//!
//! All arithmetic here is exact. Weights are capped at `2^62` so that any sum
//! of two weights fits in a `u64`; quantities that can genuinely grow (power
//! sums, symmetric functions) use big integers in the reconstruction module.

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

/// Largest admissible weight; keeps `N_i + N_j` inside `u64`.
pub const MAX_WEIGHT: u64 = 1 << 62;

pub type Result<T> = std::result::Result<T, WeightError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("NonPositive({value}): weights must be positive integers")]
    NonPositive { value: i64 },
    #[error("WeightTooLarge({value}): weights above 2^62 are not supported")]
    WeightTooLarge { value: u64 },
    #[error("TooFewWeights({found}): a weight vector needs at least two entries")]
    TooFewWeights { found: usize },
    #[error("DuplicateWeight({value}): weights must be pairwise distinct")]
    DuplicateWeight { value: u64 },
    #[error("NotCoprime({a},{b}): weights {a} and {b} share the factor {factor}")]
    NotCoprime { a: u64, b: u64, factor: u64 },
    #[error("StrictViolation: weight 1 is excluded unless explicitly allowed")]
    StrictViolation,
    #[error("EmptySet: the gcd of an empty multiset is undefined")]
    EmptySet,
    #[error(
        "NonTriangularCardinality({found}): {found} is not d(d-1)/2 for any d >= 2, \
         so the input cannot be a complete pair-sum multiset"
    )]
    NonTriangularCardinality { found: usize },
    #[error("SumTooSmall({value}): a sum of two positive integers is at least 2")]
    SumTooSmall { value: i64 },
}

/// Strictly increasing, pairwise coprime positive weights `N_1 < ... < N_d`.
///
/// The `strict` flag records whether every weight exceeds 1. The geometric
/// statements about exceptional geodesics assume strict vectors; lenient
/// vectors are still accepted by the combinatorial machinery so that the
/// boundary cases can be inspected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightVector {
    weights: Vec<u64>,
    strict: bool,
}

impl WeightVector {
    /// Validates raw input into a canonical (sorted) weight vector.
    ///
    /// With `require_strict` set, any weight equal to 1 is rejected with
    /// [`WeightError::StrictViolation`]; otherwise weight 1 is admitted and
    /// the resulting vector reports `is_strict() == false`.
    pub fn validate(raw: &[i64], require_strict: bool) -> Result<Self> {
        if raw.len() < 2 {
            return Err(WeightError::TooFewWeights { found: raw.len() });
        }
        let mut weights = Vec::with_capacity(raw.len());
        for &value in raw {
            if value <= 0 {
                return Err(WeightError::NonPositive { value });
            }
            let w = value as u64;
            if w > MAX_WEIGHT {
                return Err(WeightError::WeightTooLarge { value: w });
            }
            weights.push(w);
        }
        weights.sort_unstable();
        for pair in weights.windows(2) {
            if pair[0] == pair[1] {
                return Err(WeightError::DuplicateWeight { value: pair[0] });
            }
        }
        for i in 0..weights.len() {
            for j in (i + 1)..weights.len() {
                let g = weights[i].gcd(&weights[j]);
                if g != 1 {
                    return Err(WeightError::NotCoprime {
                        a: weights[i],
                        b: weights[j],
                        factor: g,
                    });
                }
            }
        }
        let strict = weights[0] > 1;
        if require_strict && !strict {
            return Err(WeightError::StrictViolation);
        }
        Ok(WeightVector { weights, strict })
    }

    /// Strict constructor: all weights must exceed 1.
    pub fn new(raw: &[i64]) -> Result<Self> {
        Self::validate(raw, true)
    }

    /// Number of weights `d`.
    pub fn d(&self) -> usize {
        self.weights.len()
    }

    /// The sorted weights.
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// `N_i` with the 1-based indexing used throughout.
    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i - 1]
    }

    /// Whether every weight exceeds 1.
    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// Whether every weight is odd; decides the length of the generic geodesic.
    pub fn all_odd(&self) -> bool {
        self.weights.iter().all(|w| w % 2 == 1)
    }

    /// The multiset `{ N_i + N_j : i < j }`, sorted ascending.
    pub fn pair_sums(&self) -> PairSumMultiset {
        let d = self.d();
        let mut sums = Vec::with_capacity(d * (d - 1) / 2);
        for i in 0..d {
            for j in (i + 1)..d {
                sums.push(self.weights[i] + self.weights[j]);
            }
        }
        sums.sort_unstable();
        PairSumMultiset {
            sums,
            declared_d: d,
        }
    }
}

impl std::fmt::Display for WeightVector {
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

/// A complete multiset of pair sums: `d(d-1)/2` integers, each at least 2.
///
/// Two multisets compare equal exactly when their sorted sequences agree, so
/// equality is order-independent and multiplicity-sensitive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSumMultiset {
    sums: Vec<u64>,
    declared_d: usize,
}

impl PairSumMultiset {
    /// Validates a raw multiset. The cardinality must be triangular, which
    /// determines the number of weights `d` the multiset claims to come from.
    pub fn from_sums(raw: &[i64]) -> Result<Self> {
        let d = triangular_d(raw.len())
            .ok_or(WeightError::NonTriangularCardinality { found: raw.len() })?;
        let mut sums = Vec::with_capacity(raw.len());
        for &value in raw {
            if value < 2 {
                return Err(WeightError::SumTooSmall { value });
            }
            sums.push(value as u64);
        }
        sums.sort_unstable();
        Ok(PairSumMultiset {
            sums,
            declared_d: d,
        })
    }

    /// Pair sums of an arbitrary tuple of positive integers, without the
    /// coprimality or strictness checks of [`WeightVector`]. Reconstruction
    /// candidates and collision scans need this for tuples that deliberately
    /// fail those checks.
    pub fn of_weights(weights: &[u64]) -> Self {
        let d = weights.len();
        debug_assert!(d >= 2);
        let mut sums = Vec::with_capacity(d * (d - 1) / 2);
        for i in 0..d {
            for j in (i + 1)..d {
                sums.push(weights[i] + weights[j]);
            }
        }
        sums.sort_unstable();
        PairSumMultiset {
            sums,
            declared_d: d,
        }
    }

    /// The `d` with `|sums| = d(d-1)/2`.
    pub fn declared_d(&self) -> usize {
        self.declared_d
    }

    /// The sorted sums.
    pub fn sums(&self) -> &[u64] {
        &self.sums
    }

    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }

    pub fn min(&self) -> u64 {
        self.sums[0]
    }

    pub fn max(&self) -> u64 {
        self.sums[self.sums.len() - 1]
    }

    /// Whether some value occurs more than once.
    pub fn has_repeats(&self) -> bool {
        self.sums.windows(2).any(|w| w[0] == w[1])
    }

    pub fn contains(&self, value: u64) -> bool {
        self.sums.binary_search(&value).is_ok()
    }
}

impl std::fmt::Display for PairSumMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.sums.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

/// Finds `d >= 2` with `d(d-1)/2 = n`, if any.
fn triangular_d(n: usize) -> Option<usize> {
    if n == 0 {
        return None;
    }
    let n64 = n as u64;
    let d = (1 + (1 + 8 * n64).isqrt()) / 2;
    (d >= 2 && d * (d - 1) / 2 == n64).then_some(d as usize)
}

/// Plain sorted multiset of unbounded nonnegative integers. Plumbing for
/// collision grouping and residual bookkeeping; equality and ordering are by
/// the sorted sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IntegerMultiset(Vec<u64>);

impl IntegerMultiset {
    pub fn new(values: impl IntoIterator<Item = u64>) -> Self {
        let mut v: Vec<u64> = values.into_iter().collect();
        v.sort_unstable();
        IntegerMultiset(v)
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<&PairSumMultiset> for IntegerMultiset {
    fn from(p: &PairSumMultiset) -> Self {
        IntegerMultiset(p.sums.clone())
    }
}

/// Greatest common divisor of a non-empty multiset.
pub fn gcd_multi(values: &[u64]) -> Result<u64> {
    if values.is_empty() {
        return Err(WeightError::EmptySet);
    }
    Ok(values.iter().fold(0u64, |acc, v| acc.gcd(v)))
}
