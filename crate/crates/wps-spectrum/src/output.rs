//! Stable documents for the command-line interface.
//!
//! Every successful invocation emits exactly one [`OutputDocument`]: either
//! pretty-printed JSON with fields in declared order, or a plain-text
//! rendering of the same payload. Identical inputs produce byte-identical
//! documents, so the JSON route is safe to diff and to cache. Breaking
//! payload changes bump [`SCHEMA_VERSION`].

use crate::reconstruct::{CollisionGroup, IdentityTrialsSummary, WeightCandidate};
use crate::spectrum::{HearabilityReport, LengthSpectrum, SufficientConditionReport};
use crate::stabilizers::WitnessCatalog;
use crate::weights::PairSumMultiset;
use serde::Serialize;
use std::fmt::Write as _;

pub const SCHEMA_VERSION: &str = "1.0";

/// Envelope shared by every command: the parsed inputs echoed back, the
/// command-specific result, and any warnings accumulated along the way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputDocument<I, R> {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub inputs: I,
    pub result: R,
    pub diagnostics: Vec<String>,
}

impl<I: Serialize, R: Serialize> OutputDocument<I, R> {
    pub fn new(command: &'static str, inputs: I, result: R, diagnostics: Vec<String>) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION,
            command,
            inputs,
            result,
            diagnostics,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self)
            .expect("document serialization cannot fail");
        text.push('\n');
        text
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumInputs {
    pub weights: Vec<u64>,
    pub allow_weight_one: bool,
    pub full_grassmannian: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumPayload {
    pub spectrum: LengthSpectrum,
    pub sufficient_condition: SufficientConditionReport,
    /// Witnesses including non-isotropic ones; present only on request.
    pub grassmannian_witnesses: Option<WitnessCatalog>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HearInputs {
    pub weights: Vec<u64>,
    pub allow_weight_one: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructInputs {
    pub sums: Vec<u64>,
    pub method: String,
    pub require_coprime: bool,
}

/// One reconstruction route's outcome, labeled by its CLI token.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MethodRun {
    pub method: String,
    pub solutions: Vec<WeightCandidate>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructPayload {
    pub input: PairSumMultiset,
    pub runs: Vec<MethodRun>,
    /// Whether the two routes produced the same solution set; absent unless
    /// both ran.
    pub agreement: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollideInputs {
    pub d: usize,
    pub max_weight: u64,
    pub require_coprime: bool,
    pub require_strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollidePayload {
    pub group_count: usize,
    pub groups: Vec<CollisionGroup>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityInputs {
    pub d: usize,
    pub k: u32,
    pub trials: u32,
    pub seed: u64,
    pub max_entry: u64,
}

fn push_candidate_lines(out: &mut String, candidates: &[WeightCandidate], indent: &str) {
    for c in candidates {
        let _ = writeln!(
            out,
            "{indent}{c}  coprime={} strict={}",
            c.pairwise_coprime, c.strict
        );
    }
}

pub fn render_spectrum_text(payload: &SpectrumPayload) -> String {
    let mut out = String::new();
    let spec = &payload.spectrum;
    let _ = writeln!(
        out,
        "weights {}: {}",
        spec.weights,
        if spec.all_weights_odd {
            "all weights odd"
        } else {
            "some weight even"
        }
    );
    if payload.sufficient_condition.holds {
        out.push_str("shortest-lengths condition: holds\n");
    } else {
        out.push_str("shortest-lengths condition: fails\n");
        for v in &payload.sufficient_condition.violations {
            let _ = writeln!(out, "    {v}");
        }
    }
    out.push_str("classes:\n");
    for class in &spec.classes {
        let _ = write!(
            out,
            "  k={:<4} length {:<6} {:<11}",
            class.k,
            class.length_display(),
            class.kind.to_string()
        );
        if let Some(dim) = class.max_family_dimension {
            let _ = write!(out, " dim {dim}");
        }
        if !class.desirable_pairs.is_empty() {
            let _ = write!(out, " pairs {:?}", class.desirable_pairs);
        }
        out.push('\n');
        for w in &class.witnesses {
            let _ = writeln!(out, "      witness {w}");
        }
    }
    if let Some(catalog) = &payload.grassmannian_witnesses {
        out.push_str("grassmannian witnesses (non-isotropic included):\n");
        for w in &catalog.witnesses {
            let _ = writeln!(
                out,
                "  {w}{}",
                if w.is_isotropic() { "" } else { "  [non-isotropic]" }
            );
        }
    }
    out
}

pub fn render_hear_text(report: &HearabilityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "weights {}", report.weights);
    let _ = writeln!(out, "verdict: {}", report.verdict);
    match &report.heard_pair_sums {
        Some(sums) => {
            let _ = writeln!(out, "heard pair sums: {sums}");
        }
        None => out.push_str("heard pair sums: not provably recoverable\n"),
    }
    out.push_str("pair status:\n");
    for entry in &report.per_sum_status {
        let _ = writeln!(
            out,
            "  ({},{}) sum {}: {}",
            entry.i, entry.j, entry.sum, entry.status
        );
    }
    if !report.determined_weights.is_empty() {
        out.push_str("candidates:\n");
        push_candidate_lines(&mut out, &report.determined_weights, "  ");
    }
    out
}

pub fn render_reconstruct_text(payload: &ReconstructPayload) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "sums {} (d={})",
        payload.input,
        payload.input.declared_d()
    );
    for run in &payload.runs {
        let _ = writeln!(
            out,
            "method {}: {} solution{}",
            run.method,
            run.solutions.len(),
            if run.solutions.len() == 1 { "" } else { "s" }
        );
        push_candidate_lines(&mut out, &run.solutions, "  ");
        if let Some(note) = &run.note {
            let _ = writeln!(out, "  note: {note}");
        }
    }
    if let Some(agree) = payload.agreement {
        let _ = writeln!(out, "cross-check: {}", if agree { "agree" } else { "MISMATCH" });
    }
    out
}

pub fn render_collide_text(inputs: &CollideInputs, payload: &CollidePayload) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} colliding group{} (d={}, weights <= {})",
        payload.group_count,
        if payload.group_count == 1 { "" } else { "s" },
        inputs.d,
        inputs.max_weight
    );
    for group in &payload.groups {
        let _ = writeln!(out, "shared sums {}:", group.pair_sums);
        push_candidate_lines(&mut out, &group.members, "  ");
    }
    out
}

pub fn render_identity_text(summary: &IdentityTrialsSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "d={}, k={}, {} trials, entries 1..={}, seed {}",
        summary.d, summary.k, summary.trials, summary.max_entry, summary.seed
    );
    let _ = writeln!(
        out,
        "corrected form (coefficient d - 2^(k-1)) held: {}/{}",
        summary.corrected_held, summary.trials
    );
    let _ = writeln!(
        out,
        "printed form   (coefficient d - 2^k)     held: {}/{}",
        summary.printed_held, summary.trials
    );
    if let Some(sample) = &summary.sample {
        let _ = writeln!(
            out,
            "sample: lhs {} corrected {} printed {}",
            sample.lhs, sample.corrected_rhs, sample.printed_rhs
        );
    }
    out
}
