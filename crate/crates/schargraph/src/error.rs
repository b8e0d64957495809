//! Error and validation-report types shared across the crate.
//!
//! Structural problems detected while checking a candidate graph pair are
//! collected into a [`ValidationReport`] (many findings per run) instead of
//! failing fast; analysis routines that cannot proceed at all return an
//! [`Error`].  Every failure carries a stable SCREAMING_SNAKE code so that
//! callers (and the command-line tool's JSON output) can match on it without
//! parsing prose.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Stable identifier for a violated structural invariant of a graph pair.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ViolationCode {
    /// A side does not have equally many positive and negative fat vertices.
    SignImbalance,
    /// The edge list does not cover every slot exactly once.
    SlotCoverage,
    /// An edge joins two slots of equal character (sign times parity).
    ParityViolation,
    /// Face tracing of a side does not give a sphere on every component.
    GenusNonzero,
    /// The component-containment map is missing, cyclic, or out of range.
    NestingInconsistent,
    /// The raw data is malformed before any invariant can be checked
    /// (zero or odd order, out-of-range ids, wrong list lengths, ...).
    InvalidInput,
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationCode::SignImbalance => "SIGN_IMBALANCE",
            ViolationCode::SlotCoverage => "SLOT_COVERAGE",
            ViolationCode::ParityViolation => "PARITY_VIOLATION",
            ViolationCode::GenusNonzero => "GENUS_NONZERO",
            ViolationCode::NestingInconsistent => "NESTING_INCONSISTENT",
            ViolationCode::InvalidInput => "INVALID_INPUT",
        };
        f.write_str(s)
    }
}

/// One violated invariant, with a human-readable location/description.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Violation {
    /// Which invariant failed.
    pub code: ViolationCode,
    /// Where and how, e.g. `"edge ((1,1),(2,1)) joins characters (+,+)"`.
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.detail)
    }
}

/// The complete outcome of validating one candidate pair.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    /// Every violated invariant found (empty means the pair is valid).
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    /// True when no invariant was violated.
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// True when some violation carries the given code.
    pub fn has(&self, code: ViolationCode) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }

    pub(crate) fn push(&mut self, code: ViolationCode, detail: impl Into<String>) {
        self.violations.push(Violation {
            code,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Failure of an analysis routine that cannot produce a partial result.
#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum Error {
    /// The input pair is structurally invalid; carries the full report.
    #[error("INVALID_PAIR: {}", format_violations(.0))]
    InvalidPair(Vec<Violation>),
    /// A derivative was requested of a star without switches.
    #[error("NO_SWITCHES: {0}")]
    NoSwitches(String),
    /// The coherence construction exceeded its iteration bound.
    #[error("COHERENCE_DIVERGENCE: {0}")]
    CoherenceDivergence(String),
    /// A corner whose goodness is undefined (mixed anticlockwise-switch
    /// characters) was encountered where a verdict was required.
    #[error("UGLY_CORNER: {0}")]
    UglyCorner(String),
    /// A star operation needed the full label set but got a proper subset.
    #[error("PARTIAL_TYPE: {0}")]
    PartialType(String),
    /// Two-coloring was requested on a graph with an odd-degree vertex.
    #[error("ODD_DEGREE: {0}")]
    OddDegree(String),
    /// A disk-descent step hit a region with no opposite-sign content.
    #[error("TRIVIAL_DISK: {0}")]
    TrivialDisk(String),
    /// An enumeration request exceeds the configured size budget.
    #[error("BUDGET_EXCEEDED: {0}")]
    BudgetExceeded(String),
    /// An index census was requested on a disconnected directed graph,
    /// where the face characteristics would be guesswork.
    #[error("DISCONNECTED: {0}")]
    Disconnected(String),
    /// An index witness was requested for a face whose boundary index is
    /// positive, so the guarantee does not apply.
    #[error("PRECONDITION_INDEX: {0}")]
    PreconditionIndex(String),
    /// A boundary-index computation was requested on a non-disk region.
    #[error("NOT_A_DISK: {0}")]
    NotADisk(String),
    /// A verification run named a lemma that is not in the registry.
    #[error("UNKNOWN_LEMMA: {0}")]
    UnknownLemma(String),
    /// Malformed input to an analysis routine (bad ids, empty sets, ...).
    #[error("INVALID_INPUT: {0}")]
    InvalidInput(String),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

impl Error {
    /// The stable SCREAMING_SNAKE code of this error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPair(_) => "INVALID_PAIR",
            Error::NoSwitches(_) => "NO_SWITCHES",
            Error::CoherenceDivergence(_) => "COHERENCE_DIVERGENCE",
            Error::UglyCorner(_) => "UGLY_CORNER",
            Error::PartialType(_) => "PARTIAL_TYPE",
            Error::OddDegree(_) => "ODD_DEGREE",
            Error::TrivialDisk(_) => "TRIVIAL_DISK",
            Error::BudgetExceeded(_) => "BUDGET_EXCEEDED",
            Error::Disconnected(_) => "DISCONNECTED",
            Error::PreconditionIndex(_) => "PRECONDITION_INDEX",
            Error::NotADisk(_) => "NOT_A_DISK",
            Error::UnknownLemma(_) => "UNKNOWN_LEMMA",
            Error::InvalidInput(_) => "INVALID_INPUT",
        }
    }
}

/// Convenient alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
