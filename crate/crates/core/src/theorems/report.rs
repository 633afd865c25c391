use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::field::Field;

use super::claims::{ClaimEvaluation, Outcome};
use super::ClaimId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Sampled,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Proven,
    Verified,
    Inconclusive,
    Refuted,
}

/// One witness object with its coordinates rendered as text.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub name: String,
    pub kind: String,
    pub coords: Vec<String>,
}

/// Outcome of a claim on one configuration, in serializable form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: ClaimId,
    /// Unset when the construction hit a degeneracy.
    pub holds: Option<bool>,
    pub witness: Vec<WitnessEntry>,
    pub degeneracy: Option<String>,
    pub failed_checks: Vec<String>,
    pub sample_index: Option<u64>,
    /// The configuration parameters, rendered.
    pub params: Vec<String>,
}

impl ClaimResult {
    pub fn from_evaluation<T: Field>(
        eval: &ClaimEvaluation<T>,
        params: Vec<String>,
        sample_index: Option<u64>,
    ) -> Self {
        let witness = eval
            .witness
            .entries()
            .iter()
            .map(|(name, e)| WitnessEntry {
                name: name.clone(),
                kind: e.kind().to_string(),
                coords: e.coords().iter().map(|c| c.render()).collect(),
            })
            .collect();
        let failed_checks = match &eval.outcome {
            Outcome::Fails(f) => f.clone(),
            _ => Vec::new(),
        };
        ClaimResult {
            claim: eval.claim,
            holds: eval.holds(),
            witness,
            degeneracy: eval.degeneracy().map(str::to_string),
            failed_checks,
            sample_index,
            params,
        }
    }

    pub fn point(&self, name: &str) -> Option<(&str, &str)> {
        self.witness
            .iter()
            .find(|e| e.name == name && e.kind == "point")
            .map(|e| (e.coords[0].as_str(), e.coords[1].as_str()))
    }
}

/// Result of one verification run of one claim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub claim: ClaimId,
    pub mode: Mode,
    pub status: Status,
    pub samples: u64,
    /// Failing configurations, ordered by sample index.
    pub failures: Vec<ClaimResult>,
    /// Denominators met in a symbolic proof, each nonzero as a polynomial.
    pub denominator_assumptions: Vec<String>,
    pub elapsed_ms: u64,
    /// Sampled mode: configurations redrawn because of a degeneracy.
    pub resamples: u64,
    /// Sampled mode: degeneracy tag counts.
    pub degeneracies: BTreeMap<String, u64>,
    pub note: Option<String>,
}

impl TheoremReport {
    pub(crate) fn new(claim: ClaimId, mode: Mode, status: Status) -> Self {
        TheoremReport {
            claim,
            mode,
            status,
            samples: 0,
            failures: Vec::new(),
            denominator_assumptions: Vec::new(),
            elapsed_ms: 0,
            resamples: 0,
            degeneracies: BTreeMap::new(),
            note: None,
        }
    }

    /// Fraction of draws that had to be redrawn.
    pub fn resample_rate(&self) -> f64 {
        if self.samples == 0 {
            0.0
        } else {
            self.resamples as f64 / self.samples as f64
        }
    }

    pub fn succeeded(&self) -> bool {
        matches!(self.status, Status::Proven | Status::Verified)
    }
}
