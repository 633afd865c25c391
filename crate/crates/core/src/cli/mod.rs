//! The `rectpoint` command line: `verify`, `formulas` and `figure`.
//!
//! Exit codes: 0 when everything was proven or verified, 1 when something
//! was refuted (or a formula mismatched), 2 on usage errors, 3 when a
//! result is inconclusive or a figure's configuration is degenerate.

mod figure;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use crate::arith::{parse_rational, BigRat};
use crate::field::Field;
use crate::theorems::{
    check_claim, formula_catalog, reference_formulas, reproduce_formulas, verify_sampled,
    verify_symbolic, ClaimId, Config, Outcome, Status, TheoremReport, Transcription,
};

pub use figure::{clip_line, render_svg, FigureDoc, FigureElement};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "rectpoint",
    version,
    about = "Euler-line and Brocard-axis claims about a rectangle and a point, checked in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Prove or sample-check claims.
    Verify(VerifyArgs),
    /// Compare the transcribed formulas with the derivation.
    Formulas(FormulasArgs),
    /// Emit a claim's construction as JSON or SVG.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ClaimSel {
    All,
    One(ClaimId),
}

impl FromStr for ClaimSel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(ClaimSel::All);
        }
        s.parse().map(ClaimSel::One).map_err(|e| {
            let names: Vec<&str> = ClaimId::ALL.iter().map(|c| c.name()).collect();
            format!("{e}; expected all or one of {}", names.join(", "))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symbolic,
    Sampled,
    Both,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    /// Claim name (T1E, T1B, T2 … T9iii, EQS) or `all`.
    #[arg(long, default_value = "all")]
    claim: ClaimSel,
    #[arg(long, value_enum, default_value_t = ModeArg::Both)]
    mode: ModeArg,
    #[arg(long, default_value_t = 100)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print one JSON document instead of text.
    #[arg(long)]
    json: bool,
    /// Report wall-clock times; without it `elapsed_ms` is 0 so output is
    /// reproducible byte for byte.
    #[arg(long)]
    timings: bool,
}

#[derive(Debug, clap::Args)]
struct FormulasArgs {
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FigureFormat {
    Json,
    Svg,
}

#[derive(Debug, clap::Args)]
struct FigureArgs {
    #[arg(long)]
    claim: ClaimId,
    /// Comma-separated rationals: `a,b,c,d`, or `a1,b1,c1,d1,a2,b2` for T2.
    #[arg(long, default_value = "1,2,3,5", allow_hyphen_values = true)]
    params: String,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FigureFormat::Json)]
    format: FigureFormat,
}

/// Parses `args` (program name first) and runs the subcommand, returning
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let text = e.render().to_string();
            let _ = write!(sink, "{text}");
            if e.use_stderr() && !text.contains("Usage:") {
                let _ = writeln!(sink, "\n{}", Cli::command().render_usage());
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => run_verify(&a, out, err),
        Command::Formulas(a) => run_formulas_with(&reference_formulas(), a.json, out),
        Command::Figure(a) => run_figure(&a, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_USAGE
    })
}

/// Exit code for a set of reports: refuted wins over inconclusive.
pub fn exit_code(reports: &[TheoremReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Refuted) {
        EXIT_REFUTED
    } else if reports.iter().any(|r| r.status == Status::Inconclusive) {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    }
}

fn run_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    if a.samples == 0 && a.mode != ModeArg::Symbolic {
        let _ = writeln!(err, "error: --samples must be at least 1");
        return Ok(EXIT_USAGE);
    }
    let claims = match a.claim {
        ClaimSel::All => ClaimId::ALL.to_vec(),
        ClaimSel::One(id) => vec![id],
    };
    let mut reports = Vec::new();
    for id in claims {
        if matches!(a.mode, ModeArg::Symbolic | ModeArg::Both) {
            reports.push(if id == ClaimId::EQS {
                reproduce_formulas()
            } else {
                verify_symbolic(id)
            });
        }
        if matches!(a.mode, ModeArg::Sampled | ModeArg::Both) {
            reports.push(verify_sampled(id, a.samples, a.seed).map_err(|e| e.to_string())?);
        }
    }
    if !a.timings {
        for r in &mut reports {
            r.elapsed_ms = 0;
        }
    }
    if a.json {
        let text = serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())?;
        writeln!(out, "{text}").map_err(|e| e.to_string())?;
    } else {
        for r in &reports {
            write_report(r, a.timings, out).map_err(|e| e.to_string())?;
        }
    }
    Ok(exit_code(&reports))
}

fn write_report(r: &TheoremReport, timings: bool, out: &mut dyn Write) -> std::io::Result<()> {
    let mode = serde_json::to_value(r.mode).ok();
    let status = serde_json::to_value(r.status).ok();
    let text = |v: Option<serde_json::Value>| {
        v.and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default()
    };
    write!(
        out,
        "{:<6} {:<9} {:<12}",
        r.claim.name(),
        text(mode),
        text(status)
    )?;
    match r.mode {
        crate::theorems::Mode::Symbolic => write!(
            out,
            " {} nonzero denominators",
            r.denominator_assumptions.len()
        )?,
        _ => write!(
            out,
            " {}/{} samples hold, {} resampled",
            r.samples - r.failures.len() as u64,
            r.samples,
            r.resamples
        )?,
    }
    if timings {
        write!(out, "  {} ms", r.elapsed_ms)?;
    }
    writeln!(out)?;
    if let Some(note) = &r.note {
        writeln!(out, "       {note}")?;
    }
    for f in &r.failures {
        writeln!(
            out,
            "       failed at sample {:?} with params [{}]: {}",
            f.sample_index,
            f.params.join(", "),
            f.failed_checks.join("; ")
        )?;
    }
    Ok(())
}

/// Prints the formula catalog for `table`; exit 0 iff every entry matches.
pub fn run_formulas_with(
    table: &[Transcription],
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let entries = formula_catalog(table)?;
    let all = entries.iter().all(|e| e.matches);
    if json {
        let doc = serde_json::json!({ "all_match": all, "entries": entries });
        let text = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?;
        writeln!(out, "{text}").map_err(|e| e.to_string())?;
    } else {
        for e in &entries {
            let flag = if e.matches { "MATCH" } else { "MISMATCH" };
            let _ = writeln!(out, "({:>2}) {:<9} {flag}", e.index, e.label);
            let _ = writeln!(out, "     transcribed: {}", abbreviate(&e.transcribed));
            let _ = writeln!(out, "     derived:     {}", abbreviate(&e.derived));
        }
        let matched = entries.iter().filter(|e| e.matches).count();
        let _ = writeln!(out, "{matched}/{} equations match", entries.len());
    }
    Ok(if all { EXIT_OK } else { EXIT_REFUTED })
}

/// Derived forms are never gcd-reduced and can run to megabytes; text
/// output keeps the head of long ones (JSON keeps everything).
fn abbreviate(text: &str) -> String {
    const KEEP: usize = 160;
    if text.len() <= 2 * KEEP {
        return text.to_string();
    }
    let cut = (0..=KEEP)
        .rev()
        .find(|&i| text.is_char_boundary(i))
        .unwrap_or(0);
    format!("{} … [{} characters]", &text[..cut], text.len())
}

fn run_figure(a: &FigureArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let params: Vec<BigRat> = a
        .params
        .split(',')
        .map(parse_rational)
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad --params: {e}"))?;
    let Some(cfg) = Config::from_params(a.claim.kind(), params.clone()) else {
        let want = match a.claim.kind() {
            crate::theorems::ConfigKind::Rect => 4,
            crate::theorems::ConfigKind::TwoRect => 6,
        };
        return Err(format!(
            "{} needs {want} parameters, got {}",
            a.claim,
            params.len()
        ));
    };
    let eval = check_claim(a.claim, &cfg, None).map_err(|e| e.to_string())?;
    let holds = match &eval.outcome {
        Outcome::Holds => true,
        Outcome::Fails(_) => false,
        Outcome::Degenerate(tag) => {
            let _ = writeln!(err, "degenerate configuration: {tag}");
            return Ok(EXIT_INCONCLUSIVE);
        }
        Outcome::OverBudget { step, .. } => {
            let _ = writeln!(err, "over budget at {step}");
            return Ok(EXIT_INCONCLUSIVE);
        }
    };
    let rendered: Vec<String> = params.iter().map(Field::render).collect();
    let doc = FigureDoc::from_witness(a.claim, rendered, holds, &eval.witness);
    let body = match a.format {
        FigureFormat::Json => serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())? + "\n",
        FigureFormat::Svg => render_svg(&doc),
    };
    match &a.out {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?,
        None => out.write_all(body.as_bytes()).map_err(|e| e.to_string())?,
    }
    Ok(if holds { EXIT_OK } else { EXIT_REFUTED })
}
