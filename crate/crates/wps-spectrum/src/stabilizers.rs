//! Exceptional stabilizer witnesses.
//!
//! Fix a base index `r < d` and disjoint subsets `S1, S2` of `{r+1, ..., d}`
//! with `S1 ∪ S2` nonempty. The witness couples the base weight to each
//! member weight through the sigma values
//!
//! ```text
//! σ_m = |N_m - N_r|   for m in S1,
//! σ_m =  N_m + N_r    for m in S2,
//! ```
//!
//! and `k = gcd{σ_m}` is the order of the cyclic symmetry acting on the
//! corresponding family of exceptional directions. A witness contributes
//! closed curves of length `2π/k` exactly when `k > 2`. Witnesses with `S2`
//! nonempty are isotropic and yield genuine geodesics; pure-`S1` witnesses
//! belong to the wider exceptional picture only, so the geodesic-flow callers
//! pass `isotropic_only = true`.
//!
//! Since the weights are sorted, `m > r` gives `σ_m = N_m - N_r >= 1`, so the
//! gcd is always defined. The smallest witnesses matter most: a singleton
//! `S2 = {j}` always survives the `k > 2` cut because `N_r + N_j >= 3`, which
//! is why every pair sum appears as a stabilizer order.
//!
//! Enumeration visits each `(r, S1, S2)` triple exactly once; the cost is
//! `O(d * 3^(d-1))`, fine at desk scale (`d <= 10`).

use crate::weights::{gcd_multi, WeightVector};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("NonIsotropicWitness: family dimension is defined only when S2 is nonempty")]
    NonIsotropicWitness,
}

/// One witness `(r, S1, S2)` with its sigma values and their gcd `k`.
///
/// All indices are 1-based positions into the sorted weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerWitness {
    pub r: usize,
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
    /// `σ_m` keyed by the member index `m`.
    pub sigma_values: BTreeMap<usize, u64>,
    /// `gcd` of the sigma values.
    pub k: u64,
}

impl StabilizerWitness {
    /// `|S1 ∪ S2|`.
    pub fn support_len(&self) -> usize {
        self.s1.len() + self.s2.len()
    }

    /// Whether the witness has the desirable shape `S1 = {}`, `S2 = {j}`,
    /// which pins the isolated geodesic of length `2π/(N_r + N_j)`.
    pub fn is_singleton_desirable(&self) -> bool {
        self.s1.is_empty() && self.s2.len() == 1
    }

    /// Whether the witness direction is isotropic, i.e. `S2` is nonempty.
    pub fn is_isotropic(&self) -> bool {
        !self.s2.is_empty()
    }
}

impl std::fmt::Display for StabilizerWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(r={}, S1={:?}, S2={:?}, k={})",
            self.r, self.s1, self.s2, self.k
        )
    }
}

/// Every witness of a weight vector, sorted by `(r, S1, S2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCatalog {
    pub witnesses: Vec<StabilizerWitness>,
    pub isotropic_only: bool,
}

impl WitnessCatalog {
    /// The distinct stabilizer orders present.
    pub fn k_values(&self) -> BTreeSet<u64> {
        self.witnesses.iter().map(|w| w.k).collect()
    }

    pub fn witnesses_for_k(&self, k: u64) -> Vec<&StabilizerWitness> {
        self.witnesses.iter().filter(|w| w.k == k).collect()
    }

    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Enumerates every witness with `k > 2`.
///
/// With `isotropic_only` set, witnesses with empty `S2` are suppressed and the
/// survivors correspond to closed geodesics; without it the catalog is the
/// full exceptional set, including the pure-difference families.
pub fn enumerate_witnesses(w: &WeightVector, isotropic_only: bool) -> WitnessCatalog {
    let d = w.d();
    let mut witnesses = Vec::new();
    for r in 1..d {
        let tail = d - r; // member indices r+1 ..= d
        let mut assignment = vec![0u8; tail]; // 0 skip, 1 -> S1, 2 -> S2
        loop {
            // Advance the base-3 counter; the all-zero assignment is skipped.
            let mut pos = 0;
            while pos < tail {
                assignment[pos] += 1;
                if assignment[pos] < 3 {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
            if pos == tail {
                break;
            }

            if isotropic_only && !assignment.contains(&2) {
                continue;
            }
            let mut s1 = Vec::new();
            let mut s2 = Vec::new();
            let mut sigma_values = BTreeMap::new();
            for (offset, &slot) in assignment.iter().enumerate() {
                let m = r + 1 + offset;
                match slot {
                    1 => {
                        s1.push(m);
                        sigma_values.insert(m, w.weight(m) - w.weight(r));
                    }
                    2 => {
                        s2.push(m);
                        sigma_values.insert(m, w.weight(m) + w.weight(r));
                    }
                    _ => {}
                }
            }
            let sigmas: Vec<u64> = sigma_values.values().copied().collect();
            let k = gcd_multi(&sigmas).expect("S1 ∪ S2 is nonempty");
            if k > 2 {
                witnesses.push(StabilizerWitness {
                    r,
                    s1,
                    s2,
                    sigma_values,
                    k,
                });
            }
        }
    }
    witnesses.sort_by(|a, b| {
        (a.r, &a.s1, &a.s2).cmp(&(b.r, &b.s1, &b.s2))
    });
    WitnessCatalog {
        witnesses,
        isotropic_only,
    }
}

/// Independent oracle for the achievable stabilizer orders.
///
/// For each witness shape it finds the largest `n >= 3` dividing every sigma
/// value by downward trial division, never calling a gcd routine. Intended as
/// a cross-check for [`enumerate_witnesses`]; the two must agree on the set of
/// orders for every weight vector.
pub fn oracle_stabilizer_orders(w: &WeightVector, isotropic_only: bool) -> BTreeSet<u64> {
    let d = w.d();
    let mut achieved = BTreeSet::new();
    for r in 1..d {
        let tail = d - r;
        let mut assignment = vec![0u8; tail];
        loop {
            let mut pos = 0;
            while pos < tail {
                assignment[pos] += 1;
                if assignment[pos] < 3 {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
            if pos == tail {
                break;
            }
            if isotropic_only && !assignment.contains(&2) {
                continue;
            }
            let mut sigmas = Vec::new();
            for (offset, &slot) in assignment.iter().enumerate() {
                let m = r + 1 + offset;
                match slot {
                    1 => sigmas.push(w.weight(m) - w.weight(r)),
                    2 => sigmas.push(w.weight(m) + w.weight(r)),
                    _ => {}
                }
            }
            let smallest = *sigmas.iter().min().expect("nonempty subset");
            for n in (3..=smallest).rev() {
                if sigmas.iter().all(|s| s % n == 0) {
                    achieved.insert(n);
                    break;
                }
            }
        }
    }
    achieved
}

/// Dimension of the family of geodesics a witness sustains: `2|S1 ∪ S2| - 2`.
///
/// Only isotropic witnesses bound geodesic families; a pure-`S1` witness has
/// no length to report and is rejected.
pub fn family_dimension(witness: &StabilizerWitness) -> Result<u32, WitnessError> {
    if !witness.is_isotropic() {
        return Err(WitnessError::NonIsotropicWitness);
    }
    Ok(2 * witness.support_len() as u32 - 2)
}
