//! Exceptional geodesics and audible invariants of weighted projective spaces.
//!
//! A weighted projective space is the quotient of the unit sphere
//! `S^(2d-1) ⊂ C^d` by the circle action with pairwise coprime integer
//! weights `N_1 < … < N_d`. Its geodesics come in classes of length `2π/k`,
//! and the achieved orders `k` are controlled by an elementary arithmetic of
//! the weights. This crate computes that arithmetic exactly:
//!
//! - [`weights`]: validated weight vectors and pair-sum multisets;
//! - [`stabilizers`]: the witness enumeration producing every achieved
//!   stabilizer order, plus an independent divisor-search oracle;
//! - [`spectrum`]: assembled length spectra, the shortest-lengths sufficient
//!   condition, and the hearability decision (can the pair sums, and then
//!   the weights, be read off the spectrum);
//! - [`reconstruct`]: recovery of weights from a pair-sum multiset by two
//!   routes (a power-sum ladder with integer root extraction, and a
//!   turnpike-style backtracking search), the two forms of the closing
//!   power-sum identity, and a parallel scan for distinct tuples sharing a
//!   pair-sum multiset;
//! - [`output`]: stable JSON documents for the command-line interface.
//!
//! The `examples/` directory exercises each capability end to end:
//! `spectrum_basics`, `hear_weights`, `reconstruct_sums`, `collision_search`,
//! and `identity_forms`. The `wps` binary exposes the same operations as
//! subcommands emitting the JSON documents.

pub mod output;
pub mod reconstruct;
pub mod spectrum;
pub mod stabilizers;
pub mod weights;

pub use output::{OutputDocument, SCHEMA_VERSION};
pub use reconstruct::{
    find_collisions, identity_trials, pairsum_power_sum, power_sum_ladder,
    reconstruct_backtracking, reconstruct_newton, verify_appendix_identity, CollisionGroup,
    IdentityReport, IdentityTrialsSummary, Method, PowerSumLadder, ReconstructError,
    ReconstructionResult, WeightCandidate,
};
pub use spectrum::{
    check_sufficient_condition, hear, length_spectrum, line_spectrum_d2, ClassKind,
    GeodesicClass, HearVerdict, HearabilityReport, LengthSpectrum, PairSumEntry, PairSumStatus,
    SpectrumError, SufficientConditionReport, SufficientConditionViolation,
};
pub use stabilizers::{
    enumerate_witnesses, family_dimension, oracle_stabilizer_orders, StabilizerWitness,
    WitnessCatalog,
};
pub use weights::{gcd_multi, IntegerMultiset, PairSumMultiset, WeightError, WeightVector};
