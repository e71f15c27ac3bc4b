//! Structured pass/fail verdicts for identity checks.

use crate::algebra::Element;
use std::fmt;

/// Outcome of a single verification, with enough detail to locate the first
/// discrepancy when it fails.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Pass,
    /// An exact symbolic mismatch: the first offending power of `y` (when the
    /// check is per-power) and the nonzero difference.
    Fail {
        power: Option<usize>,
        difference: Element,
    },
    /// A numeric mismatch from the floating-point oracle.
    FailNumeric { lhs: f64, rhs: f64, error: f64 },
}

/// A named verification result with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub identity: String,
    pub params: Vec<(&'static str, String)>,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(
        identity: impl Into<String>,
        params: Vec<(&'static str, String)>,
        verdict: Verdict,
    ) -> Self {
        Report {
            identity: identity.into(),
            params,
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.identity)?;
        for (name, value) in &self.params {
            write!(f, " {name}={value}")?;
        }
        match &self.verdict {
            Verdict::Pass => write!(f, ": PASS"),
            Verdict::Fail { power, difference } => {
                write!(f, ": FAIL")?;
                if let Some(k) = power {
                    write!(f, " at y^{k}")?;
                }
                write!(f, ", difference = {difference}")
            }
            Verdict::FailNumeric { lhs, rhs, error } => {
                write!(f, ": FAIL, lhs = {lhs:.17e}, rhs = {rhs:.17e}, error = {error:.3e}")
            }
        }
    }
}
