//! Runs every test on one polynomial and cross-checks the verdicts.

use crate::error::{Error, Result};
use crate::hermite_biehler::condition_b;
use crate::hurwitz::minor_criterion;
use crate::oracle::{oracle_stability, OracleClass, OracleVerdict};
use crate::poly::Polynomial;
use crate::report::{StabilityReport, Verdict};
use crate::routh::is_stable_routh;

#[derive(Clone, Debug)]
pub struct Analysis {
    pub routh: StabilityReport,
    pub minors: StabilityReport,
    pub hermite_biehler: StabilityReport,
    pub oracle: std::result::Result<OracleVerdict, Error>,
}

impl Analysis {
    /// All three exact methods reach the same verdict.
    pub fn exact_agree(&self) -> bool {
        self.routh.verdict == self.minors.verdict && self.minors.verdict == self.hermite_biehler.verdict
    }

    pub fn exact_verdict(&self) -> Option<Verdict> {
        self.exact_agree().then_some(self.routh.verdict)
    }

    /// Whether the oracle matches the exact verdict; `None` when the oracle
    /// failed, landed in its boundary band, or the exact methods disagree.
    pub fn oracle_agrees(&self) -> Option<bool> {
        let exact = self.exact_verdict()?;
        let oracle = self.oracle.as_ref().ok()?;
        match oracle.class {
            OracleClass::Boundary => None,
            OracleClass::Stable => Some(exact == Verdict::Stable),
            OracleClass::NotStable => Some(exact == Verdict::NotStable),
        }
    }
}

pub fn analyze(f: &Polynomial, tol: f64) -> Result<Analysis> {
    Ok(Analysis {
        routh: is_stable_routh(f)?,
        minors: minor_criterion(f)?,
        hermite_biehler: condition_b(f)?,
        oracle: oracle_stability(f, tol),
    })
}
