//! Configurations, claim checks and the verification drivers.
//!
//! Every claim is a construction that records its named intermediate
//! objects in a [`Witness`], followed by a list of exact [`Check`]s on
//! those objects. The same code runs over rational functions (symbolic
//! proof), exact rationals (sampled verification) and floats (replay).

mod claims;
mod config;
mod drive;
mod formulas;
mod report;
mod witness;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use claims::{check_claim, check_t2_alternate_pairing, ClaimEvaluation, Outcome};
pub use config::{
    sample_config, sample_config_attempt, Config, ConfigKind, RectConfig, TwoRectConfig,
};
pub use drive::{
    float_replay, verify_sampled, verify_symbolic, verify_symbolic_with_budget, ReplayStats,
    DEFAULT_TERM_BUDGET, MAX_ATTEMPTS, PRODUCT_FACTOR,
};
pub use formulas::{
    formula_catalog, reference_formulas, reproduce_formulas, reproduce_formulas_with,
    CatalogEntry, Transcribed, Transcription,
};
pub use report::{ClaimResult, Mode, Status, TheoremReport, WitnessEntry};
pub use witness::{Check, Element, Halt, Witness};

/// The claims the suite knows how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    /// Euler-line intersections `Q`, `R` and the center `I` are collinear.
    T1E,
    /// Brocard-axis intersections `M`, `N` and `P` are collinear.
    T1B,
    /// Two concentric rectangles, Euler-line version.
    T2,
    /// Midpoints of opposite orthocenters are collinear with `I`.
    T3,
    /// Second intersection of two circumcircles lines up with `S` and `I`.
    T4,
    /// Nine-point-center construction gives `MN ∥ IQ`.
    T5,
    /// Isogonal conjugates of `I`: `IP` bisects `PaPc` and `PbPd`.
    T6,
    /// Reflections in the side lines: `IP` bisects `QR`.
    T7,
    /// Reflections in the side midpoints: `2I − P` lies on `QR`.
    T8,
    /// `Pac` and `Pbd` are isogonal in the quadrilateral `PaPbPcPd`.
    T9i,
    /// `P`, `Q`, `R` are collinear.
    T9ii,
    /// `QPac ∥ RPbd`.
    T9iii,
    /// The thirty displayed formulas of the main proof.
    EQS,
}

impl ClaimId {
    pub const ALL: [ClaimId; 13] = [
        ClaimId::T1E,
        ClaimId::T1B,
        ClaimId::T2,
        ClaimId::T3,
        ClaimId::T4,
        ClaimId::T5,
        ClaimId::T6,
        ClaimId::T7,
        ClaimId::T8,
        ClaimId::T9i,
        ClaimId::T9ii,
        ClaimId::T9iii,
        ClaimId::EQS,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::T1E => "T1E",
            ClaimId::T1B => "T1B",
            ClaimId::T2 => "T2",
            ClaimId::T3 => "T3",
            ClaimId::T4 => "T4",
            ClaimId::T5 => "T5",
            ClaimId::T6 => "T6",
            ClaimId::T7 => "T7",
            ClaimId::T8 => "T8",
            ClaimId::T9i => "T9i",
            ClaimId::T9ii => "T9ii",
            ClaimId::T9iii => "T9iii",
            ClaimId::EQS => "EQS",
        }
    }

    /// Which configuration family the claim is stated on.
    pub fn kind(self) -> ConfigKind {
        match self {
            ClaimId::T2 => ConfigKind::TwoRect,
            _ => ConfigKind::Rect,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown claim {0:?}")]
pub struct UnknownClaim(pub String);

impl FromStr for ClaimId {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

/// Misuse of the drivers, as opposed to a mathematical outcome.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UsageError {
    #[error("sample count must be at least 1")]
    NoSamples,
    #[error("claim {claim} needs a {expected:?} configuration")]
    WrongConfig {
        claim: ClaimId,
        expected: ConfigKind,
    },
}
