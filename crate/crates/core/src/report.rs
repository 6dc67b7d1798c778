//! Verdicts shared by every stability test.

use std::fmt;

use crate::hermite_biehler::{InterlacingReport, PhaseSign, Precondition};
use crate::hurwitz::MinorSequence;
use crate::oracle::OracleVerdict;
use crate::routh::{Failure, RouthChain};
use crate::poly::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Stable,
    NotStable,
}

impl Verdict {
    pub fn is_stable(self) -> bool {
        self == Verdict::Stable
    }

    pub fn from_bool(stable: bool) -> Self {
        if stable {
            Verdict::Stable
        } else {
            Verdict::NotStable
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Stable => "stable",
            Verdict::NotStable => "not_stable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Routh,
    Minors,
    HermiteBiehler,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Note {
    /// The input had a negative constant term and was replaced by `-f`.
    SignFlipped,
    /// Degree 0 with nonzero value: there are no roots, so stability holds vacuously.
    Vacuous,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Chain(RouthChain),
    /// First failure of the Routh recursion, with the parameters accepted before it.
    Failure { reason: Failure, partial: Vec<Scalar> },
    Minors {
        minors: MinorSequence,
        /// Whether the factorization through the `J(c)` chain was reproduced
        /// exactly; only attempted when every minor is positive.
        factorization: Option<bool>,
    },
    Interlacing {
        report: Box<InterlacingReport>,
        /// Sign of `p(z^2) / (z q(z^2))` at `z = 1`, as corroboration.
        phase: PhaseSign,
    },
    /// The interlacing test does not apply and the input is not stable.
    Precondition(Precondition),
    /// Nonzero constant: nothing to test.
    Vacuous,
    Oracle(OracleVerdict),
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilityReport {
    pub verdict: Verdict,
    pub method: Method,
    pub witness: Witness,
    pub notes: Vec<Note>,
}

impl StabilityReport {
    pub fn is_stable(&self) -> bool {
        self.verdict.is_stable()
    }
}
