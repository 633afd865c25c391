use std::time::Instant;

use rayon::prelude::*;

use crate::arith::{var_names, with_product_limit, BigRat};
use crate::field::Field;

use super::claims::{check_claim, ClaimEvaluation, Outcome};
use super::config::{sample_config_attempt, Config};
use super::report::{ClaimResult, Mode, Status, TheoremReport};
use super::{ClaimId, UsageError};

/// Default cap on the stored terms of any symbolic intermediate.
pub const DEFAULT_TERM_BUDGET: usize = 2_000_000;

/// A single symbolic product may expand to this many times the term
/// budget in term pairs before like terms are collected.
pub const PRODUCT_FACTOR: usize = 10;

/// Draws per sample index before a sampled run gives up.
pub const MAX_ATTEMPTS: u64 = 100;

pub fn verify_symbolic(id: ClaimId) -> TheoremReport {
    verify_symbolic_with_budget(id, DEFAULT_TERM_BUDGET)
}

/// Checks `id` over rational functions in fresh variables.
///
/// Proven means every checked identity reduced to the zero polynomial;
/// the denominators met along the way are reported as the nonzero
/// assumptions the proof rests on. Stored objects are capped at `budget`
/// terms and single products at `PRODUCT_FACTOR · budget` term pairs;
/// going over either gives an inconclusive report.
pub fn verify_symbolic_with_budget(id: ClaimId, budget: usize) -> TheoremReport {
    let start = Instant::now();
    let cfg = Config::symbolic(id.kind());
    let limit = budget.saturating_mul(PRODUCT_FACTOR);
    let (eval, refused) = with_product_limit(limit, || {
        check_claim(id, &cfg, Some(budget)).expect("symbolic config matches claim kind")
    });
    let mut report = TheoremReport::new(id, Mode::Symbolic, Status::Proven);
    report.samples = 1;
    if let Some((n, m)) = refused {
        report.status = Status::Inconclusive;
        report.note = Some(format!(
            "term budget {budget} exceeded: product of {n}- and {m}-term polynomials"
        ));
        report.elapsed_ms = start.elapsed().as_millis() as u64;
        return report;
    }
    match &eval.outcome {
        Outcome::Holds => {
            report.denominator_assumptions = denominators(&eval);
        }
        Outcome::Fails(_) => {
            report.status = Status::Refuted;
            let names = var_names(cfg.params().len());
            report
                .failures
                .push(ClaimResult::from_evaluation(&eval, names, None));
        }
        Outcome::Degenerate(tag) => {
            report.status = Status::Inconclusive;
            report.note = Some(format!(
                "construction undefined for generic parameters: {tag}"
            ));
        }
        Outcome::OverBudget { step, terms } => {
            report.status = Status::Inconclusive;
            report.note = Some(format!(
                "term budget {budget} exceeded at {step} ({terms} terms)"
            ));
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Distinct non-constant denominators in the witness, in first-seen order.
fn denominators<T: Field>(eval: &ClaimEvaluation<T>) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for (_, e) in eval.witness.entries() {
        for c in e.coords() {
            if let Some(d) = c.denominator_poly() {
                assert!(!d.is_zero(), "a stored denominator is the zero polynomial");
                let s = d.serialize();
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// One sample index after resampling.
struct SampleRun {
    index: u64,
    tags: Vec<String>,
    config: Config<BigRat>,
    eval: ClaimEvaluation<BigRat>,
}

impl SampleRun {
    fn exhausted(&self) -> bool {
        matches!(
            self.eval.outcome,
            Outcome::Degenerate(_) | Outcome::OverBudget { .. }
        )
    }
}

fn run_sample(id: ClaimId, seed: u64, index: u64) -> SampleRun {
    let mut tags = Vec::new();
    let mut attempt = 0;
    loop {
        let config = sample_config_attempt(id.kind(), seed, index, attempt);
        let eval = check_claim(id, &config, None).expect("sampled config matches claim kind");
        attempt += 1;
        match &eval.outcome {
            Outcome::Degenerate(tag) if attempt < MAX_ATTEMPTS => tags.push(tag.clone()),
            _ => {
                return SampleRun {
                    index,
                    tags,
                    config,
                    eval,
                }
            }
        }
    }
}

/// Every sample in index order. Each index depends only on
/// `(seed, index)`, so the result does not depend on the thread count.
fn run_samples(id: ClaimId, n: u64, seed: u64) -> Vec<SampleRun> {
    (0..n)
        .into_par_iter()
        .map(|i| run_sample(id, seed, i))
        .collect()
}

fn render_params(cfg: &Config<BigRat>) -> Vec<String> {
    cfg.params().iter().map(|q| q.render()).collect()
}

/// Exact verification on `n` seeded rational configurations.
pub fn verify_sampled(id: ClaimId, n: u64, seed: u64) -> Result<TheoremReport, UsageError> {
    if n == 0 {
        return Err(UsageError::NoSamples);
    }
    let start = Instant::now();
    let runs = run_samples(id, n, seed);
    let mut report = TheoremReport::new(id, Mode::Sampled, Status::Verified);
    report.samples = n;
    let mut exhausted = 0;
    for run in &runs {
        report.resamples += run.tags.len() as u64;
        for t in &run.tags {
            *report.degeneracies.entry(t.clone()).or_default() += 1;
        }
        if run.exhausted() {
            exhausted += 1;
            if let Some(t) = run.eval.degeneracy() {
                *report.degeneracies.entry(t.to_string()).or_default() += 1;
            }
        } else if run.eval.holds() == Some(false) {
            report.failures.push(ClaimResult::from_evaluation(
                &run.eval,
                render_params(&run.config),
                Some(run.index),
            ));
        }
    }
    if !report.failures.is_empty() {
        report.status = Status::Refuted;
    } else if exhausted > 0 {
        report.status = Status::Inconclusive;
        report.note = Some(format!(
            "{exhausted} sample(s) still degenerate after {MAX_ATTEMPTS} draws"
        ));
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Counts from a float replay.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ReplayStats {
    pub replays: u64,
    pub failures: u64,
}

/// Re-checks every holding exact sample's witness in `f64`.
pub fn float_replay(
    id: ClaimId,
    n: u64,
    seed: u64,
) -> Result<(TheoremReport, ReplayStats), UsageError> {
    if n == 0 {
        return Err(UsageError::NoSamples);
    }
    let start = Instant::now();
    let runs = run_samples(id, n, seed);
    let mut report = TheoremReport::new(id, Mode::Float, Status::Verified);
    report.samples = n;
    let mut stats = ReplayStats::default();
    for run in &runs {
        if run.eval.holds() != Some(true) {
            continue;
        }
        let floats = run.eval.witness.map(|q| q.approx().unwrap_or(f64::NAN));
        stats.replays += 1;
        let outcome = run.eval.recheck(&floats);
        if outcome != Outcome::Holds {
            stats.failures += 1;
            let mut eval = run.eval.clone();
            eval.outcome = outcome;
            report.failures.push(ClaimResult::from_evaluation(
                &eval,
                render_params(&run.config),
                Some(run.index),
            ));
        }
    }
    if stats.failures > 0 {
        report.status = Status::Refuted;
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok((report, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_samples_is_a_usage_error() {
        assert_eq!(
            verify_sampled(ClaimId::T3, 0, 7),
            Err(UsageError::NoSamples)
        );
    }

    #[test]
    fn sampled_run_is_verified() {
        let report = verify_sampled(ClaimId::T3, 20, 7).unwrap();
        assert_eq!(report.status, Status::Verified);
        assert_eq!(report.samples, 20);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn symbolic_small_claims() {
        for id in [ClaimId::T1E, ClaimId::T3, ClaimId::T6] {
            let report = verify_symbolic(id);
            assert_eq!(report.status, Status::Proven, "{id}");
            assert!(!report.denominator_assumptions.is_empty());
        }
    }

    #[test]
    fn tiny_budget_is_inconclusive_not_refuted() {
        let report = verify_symbolic_with_budget(ClaimId::T1E, 5);
        assert_eq!(report.status, Status::Inconclusive);
        assert!(report.note.unwrap().contains("budget"));
    }
}
