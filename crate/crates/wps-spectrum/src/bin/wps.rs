//! Command-line front end: exact geodesic length spectra of weighted
//! projective spaces, hearability verdicts, pair-sum inversion, collision
//! scans, and the power-sum identity checker.
//!
//! Exit codes: 0 success, 2 input or validation error, 3 internal
//! cross-check failure.

use clap::{Parser, Subcommand, ValueEnum};
use std::fmt::Display;
use std::process::ExitCode;
use wps_spectrum::output::{
    render_collide_text, render_hear_text, render_identity_text, render_reconstruct_text,
    render_spectrum_text, CollideInputs, CollidePayload, HearInputs, IdentityInputs, MethodRun,
    OutputDocument, ReconstructInputs, ReconstructPayload, SpectrumInputs, SpectrumPayload,
};
use wps_spectrum::reconstruct::{
    find_collisions, identity_trials, reconstruct_backtracking, reconstruct_newton,
    ReconstructError, WeightCandidate,
};
use wps_spectrum::spectrum::{check_sufficient_condition, hear, length_spectrum};
use wps_spectrum::stabilizers::enumerate_witnesses;
use wps_spectrum::weights::{PairSumMultiset, WeightVector, MAX_WEIGHT};

#[derive(Parser)]
#[command(
    name = "wps",
    version,
    about = "Exact length spectra and audible invariants of weighted projective spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Power-sum ladder and integer root extraction; unique answer, but
    /// unavailable when the tuple length is a power of two.
    Newton,
    /// Turnpike-style search; enumerates every solution for any length.
    Backtrack,
    /// Run both and cross-check agreement (exit 3 on mismatch).
    Both,
}

impl MethodArg {
    fn token(self) -> &'static str {
        match self {
            MethodArg::Newton => "newton",
            MethodArg::Backtrack => "backtrack",
            MethodArg::Both => "both",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the geodesic length classes of a weight vector.
    Spectrum {
        /// Comma-separated positive integers, pairwise coprime.
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Admit a smallest weight of 1 (outside the strict convention).
        #[arg(long)]
        allow_weight_one: bool,
        /// Also list stabilizer witnesses whose directions are not isotropic.
        #[arg(long)]
        full_grassmannian: bool,
    },
    /// Decide whether the spectrum reveals the pair sums and the weights.
    Hear {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        allow_weight_one: bool,
    },
    /// Recover weight tuples from a multiset of pairwise sums.
    Reconstruct {
        /// Comma-separated sums; the count must be d(d-1)/2 for some d >= 2.
        #[arg(long, value_delimiter = ',', required = true)]
        sums: Vec<i64>,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Keep only pairwise coprime solutions.
        #[arg(long)]
        require_coprime: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Scan a box exhaustively for distinct tuples sharing all pair sums.
    Collide {
        /// Tuple length.
        #[arg(long)]
        d: usize,
        /// Largest weight to include in the scan.
        #[arg(long)]
        max_weight: u64,
        /// Only consider pairwise coprime tuples.
        #[arg(long)]
        require_coprime: bool,
        /// Only consider tuples with smallest weight at least 2.
        #[arg(long)]
        require_strict: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check both forms of the pair-sum power identity on random vectors.
    CheckIdentity {
        /// Vector length, at least 2.
        #[arg(long)]
        d: usize,
        /// Power, at least 1.
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 50)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Entries are sampled uniformly from 1..=max_entry.
        #[arg(long, default_value_t = 10_000)]
        max_entry: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn fail(message: impl Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn emit(format: Format, json: String, text: String) {
    match format {
        Format::Json => print!("{json}"),
        Format::Text => print!("{text}"),
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Spectrum {
            weights,
            format,
            allow_weight_one,
            full_grassmannian,
        } => cmd_spectrum(&weights, format, allow_weight_one, full_grassmannian),
        Command::Hear {
            weights,
            format,
            allow_weight_one,
        } => cmd_hear(&weights, format, allow_weight_one),
        Command::Reconstruct {
            sums,
            method,
            require_coprime,
            format,
        } => cmd_reconstruct(&sums, method, require_coprime, format),
        Command::Collide {
            d,
            max_weight,
            require_coprime,
            require_strict,
            format,
        } => cmd_collide(d, max_weight, require_coprime, require_strict, format),
        Command::CheckIdentity {
            d,
            k,
            trials,
            seed,
            max_entry,
            format,
        } => cmd_check_identity(d, k, trials, seed, max_entry, format),
    }
}

fn cmd_spectrum(
    weights: &[i64],
    format: Format,
    allow_weight_one: bool,
    full_grassmannian: bool,
) -> ExitCode {
    let w = match WeightVector::validate(weights, !allow_weight_one) {
        Ok(w) => w,
        Err(e) => return fail(e),
    };
    let inputs = SpectrumInputs {
        weights: w.weights().to_vec(),
        allow_weight_one,
        full_grassmannian,
    };
    let payload = SpectrumPayload {
        spectrum: length_spectrum(&w),
        sufficient_condition: check_sufficient_condition(&w),
        grassmannian_witnesses: full_grassmannian.then(|| enumerate_witnesses(&w, false)),
    };
    let text = render_spectrum_text(&payload);
    let doc = OutputDocument::new("spectrum", inputs, payload, vec![]);
    emit(format, doc.to_json(), text);
    ExitCode::SUCCESS
}

fn cmd_hear(weights: &[i64], format: Format, allow_weight_one: bool) -> ExitCode {
    let w = match WeightVector::validate(weights, !allow_weight_one) {
        Ok(w) => w,
        Err(e) => return fail(e),
    };
    let inputs = HearInputs {
        weights: w.weights().to_vec(),
        allow_weight_one,
    };
    let report = hear(&w);
    let text = render_hear_text(&report);
    let doc = OutputDocument::new("hear", inputs, report, vec![]);
    emit(format, doc.to_json(), text);
    ExitCode::SUCCESS
}

/// Applies the coprimality filter and explains an empty outcome.
fn finish_run(
    method: &'static str,
    solutions: Vec<WeightCandidate>,
    require_coprime: bool,
) -> MethodRun {
    let had_any = !solutions.is_empty();
    let kept: Vec<WeightCandidate> = solutions
        .into_iter()
        .filter(|c| !require_coprime || c.pairwise_coprime)
        .collect();
    let note = if kept.is_empty() {
        Some(if had_any {
            "solutions exist but none is pairwise coprime".to_string()
        } else {
            "no positive integer tuple realizes these sums".to_string()
        })
    } else {
        None
    };
    MethodRun {
        method: method.to_string(),
        solutions: kept,
        note,
    }
}

fn cmd_reconstruct(
    sums: &[i64],
    method: MethodArg,
    require_coprime: bool,
    format: Format,
) -> ExitCode {
    let multiset = match PairSumMultiset::from_sums(sums) {
        Ok(m) => m,
        Err(e) => return fail(e),
    };
    let inputs = ReconstructInputs {
        sums: multiset.sums().to_vec(),
        method: method.token().to_string(),
        require_coprime,
    };
    let mut diagnostics = Vec::new();

    let newton_run = |diag: &mut Vec<String>| match reconstruct_newton(&multiset) {
        Ok(result) => Ok(finish_run("newton", result.solutions, require_coprime)),
        Err(ReconstructError::NoIntegerSolution) => {
            Ok(finish_run("newton", vec![], require_coprime))
        }
        Err(e @ ReconstructError::PowerOfTwoD { .. }) => {
            diag.push(e.to_string());
            Err(e)
        }
    };
    let backtrack_run =
        || finish_run("backtrack", reconstruct_backtracking(&multiset, require_coprime).solutions, require_coprime);

    let (runs, agreement) = match method {
        MethodArg::Newton => match newton_run(&mut diagnostics) {
            Ok(run) => (vec![run], None),
            Err(e) => return fail(e),
        },
        MethodArg::Backtrack => (vec![backtrack_run()], None),
        MethodArg::Both => match newton_run(&mut diagnostics) {
            Ok(n_run) => {
                let b_run = backtrack_run();
                let agree = n_run.solutions == b_run.solutions;
                (vec![n_run, b_run], Some(agree))
            }
            // The ladder has a genuine zero divisor here; report the single
            // usable route instead of failing, and say so.
            Err(_) => {
                diagnostics.push(
                    "cross-check unavailable: ran the backtracking route alone".to_string(),
                );
                (vec![backtrack_run()], None)
            }
        },
    };

    let payload = ReconstructPayload {
        input: multiset,
        runs,
        agreement,
    };
    let text = render_reconstruct_text(&payload);
    let doc = OutputDocument::new("reconstruct", inputs, payload, diagnostics);
    emit(format, doc.to_json(), text);
    if agreement == Some(false) {
        eprintln!("error: the two reconstruction routes disagree");
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}

fn cmd_collide(
    d: usize,
    max_weight: u64,
    require_coprime: bool,
    require_strict: bool,
    format: Format,
) -> ExitCode {
    if d < 2 {
        return fail("OutOfRange: --d must be at least 2");
    }
    if max_weight == 0 || max_weight > MAX_WEIGHT {
        return fail(format!("OutOfRange: --max-weight must be in 1..={MAX_WEIGHT}"));
    }
    if let Ok(raw) = std::env::var("WPS_COLLIDE_THREADS") {
        match raw.parse::<usize>() {
            Ok(n) if n >= 1 => {
                // Ignore the error when a pool already exists; the variable is
                // advisory.
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                return fail("OutOfRange: WPS_COLLIDE_THREADS must be a positive integer");
            }
        }
    }
    let inputs = CollideInputs {
        d,
        max_weight,
        require_coprime,
        require_strict,
    };
    let groups = find_collisions(d, max_weight, require_coprime, require_strict);
    let payload = CollidePayload {
        group_count: groups.len(),
        groups,
    };
    let text = render_collide_text(&inputs, &payload);
    let doc = OutputDocument::new("collide", inputs, payload, vec![]);
    emit(format, doc.to_json(), text);
    ExitCode::SUCCESS
}

fn cmd_check_identity(
    d: usize,
    k: u32,
    trials: u32,
    seed: u64,
    max_entry: u64,
    format: Format,
) -> ExitCode {
    if d < 2 {
        return fail("OutOfRange: --d must be at least 2");
    }
    if k < 1 {
        return fail("OutOfRange: --k must be at least 1");
    }
    if trials < 1 {
        return fail("OutOfRange: --trials must be at least 1");
    }
    if max_entry < 1 || max_entry > MAX_WEIGHT {
        return fail(format!("OutOfRange: --max-entry must be in 1..={MAX_WEIGHT}"));
    }
    let inputs = IdentityInputs {
        d,
        k,
        trials,
        seed,
        max_entry,
    };
    let summary = identity_trials(d, k, trials, seed, max_entry);
    let text = render_identity_text(&summary);
    let doc = OutputDocument::new("check-identity", inputs, summary, vec![]);
    emit(format, doc.to_json(), text);
    ExitCode::SUCCESS
}
