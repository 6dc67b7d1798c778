//! The Routh reduction `f -> f~` and the recursion built on it.
//!
//! With `f(x) = p(x^2) + x q(x^2)`, one step sets `c = p(0)/q(0)`,
//! `p~ = q` and `q~ = (p - c q)/x`. `f` is stable exactly when `c > 0` and
//! `f~` is stable, and every well-formed step lowers the degree by one.

use std::fmt;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{EvenOddPair, Polynomial, Scalar};
use crate::report::{Method, Note, StabilityReport, Verdict, Witness};

/// Why a Routh recursion stopped. Step indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    NonpositiveC(usize),
    DegenerateStep(usize),
    NonpositiveConstantTerm,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::NonpositiveC(step) => write!(f, "NonpositiveC({step})"),
            Failure::DegenerateStep(step) => write!(f, "DegenerateStep({step})"),
            Failure::NonpositiveConstantTerm => f.write_str("NonpositiveConstantTerm"),
        }
    }
}

/// A chain that could not be completed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainFailure {
    pub failure: Failure,
    /// Parameters of the steps that did succeed.
    pub partial: Vec<Scalar>,
}

impl fmt::Display for ChainFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} after {} step(s)", self.failure, self.partial.len())
    }
}

/// Parameters `c_1, ..., c_n` and terminal constant `b` with
/// `H(f) = J(c_1) ... J(c_n) H(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouthChain {
    pub cs: Vec<Scalar>,
    pub terminal: Scalar,
}

impl RouthChain {
    pub fn all_positive(&self) -> bool {
        self.cs.iter().all(Signed::is_positive) && self.terminal.is_positive()
    }
}

/// One reduction step, returning `(c, f~)`.
pub fn routh_step(f: &Polynomial) -> Result<(Scalar, Polynomial)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if f.constant_term().is_zero() {
        return Err(Error::RootAtOrigin);
    }
    let EvenOddPair { p, q } = f.even_odd_split()?;
    if q.constant_term().is_zero() {
        return Err(Error::DegenerateStep);
    }
    let c = p.constant_term() / q.constant_term();
    let q_tilde = Polynomial::sub_scaled(&p, &c, &q).divide_by_x()?;
    let f_tilde = EvenOddPair::new(q, q_tilde).recombine();
    Ok((c, f_tilde))
}

/// Runs every step down to a constant, recording nonpositive parameters
/// rather than stopping on them. Needs `f(0) > 0` and well-formed steps.
pub fn routh_chain(f: &Polynomial) -> std::result::Result<RouthChain, ChainFailure> {
    let fail = |failure, partial| ChainFailure { failure, partial };
    if f.is_zero() || !f.constant_term().is_positive() {
        return Err(fail(Failure::NonpositiveConstantTerm, Vec::new()));
    }
    let mut cs = Vec::with_capacity(f.degree());
    let mut current = f.clone();
    while current.degree() > 0 {
        let step = cs.len() + 1;
        let (c, next) = match routh_step(&current) {
            Ok(v) => v,
            Err(_) => return Err(fail(Failure::DegenerateStep(step), cs)),
        };
        if next.is_zero() || next.degree() + 1 != current.degree() {
            return Err(fail(Failure::DegenerateStep(step), cs));
        }
        cs.push(c);
        current = next;
    }
    Ok(RouthChain {
        cs,
        terminal: current.constant_term().clone(),
    })
}

/// Stability verdict by the Routh recursion, stopping at the first failure.
///
/// A negative constant term is handled by testing `-f` instead.
pub fn is_stable_routh(f: &Polynomial) -> Result<StabilityReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (f, flipped) = f.sign_normalized();
    let mut notes = Vec::new();
    if flipped {
        notes.push(Note::SignFlipped);
    }
    let report = |verdict, witness, notes| StabilityReport {
        verdict,
        method: Method::Routh,
        witness,
        notes,
    };
    if f.constant_term().is_zero() {
        let witness = Witness::Failure {
            reason: Failure::NonpositiveConstantTerm,
            partial: Vec::new(),
        };
        return Ok(report(Verdict::NotStable, witness, notes));
    }
    if f.degree() == 0 {
        notes.push(Note::Vacuous);
    }

    let mut cs = Vec::with_capacity(f.degree());
    let mut current = f;
    while current.degree() > 0 {
        let step = cs.len() + 1;
        let failure = match routh_step(&current) {
            Ok((c, _)) if !c.is_positive() => Some(Failure::NonpositiveC(step)),
            Ok((c, next)) if !next.is_zero() && next.degree() + 1 == current.degree() => {
                cs.push(c);
                current = next;
                None
            }
            Ok(_) | Err(_) => Some(Failure::DegenerateStep(step)),
        };
        if let Some(reason) = failure {
            let witness = Witness::Failure { reason, partial: cs };
            return Ok(report(Verdict::NotStable, witness, notes));
        }
    }
    let terminal = current.constant_term().clone();
    // c_j > 0 for all j forces every intermediate constant term, and so b, positive
    debug_assert!(terminal.is_positive());
    Ok(report(
        Verdict::Stable,
        Witness::Chain(RouthChain { cs, terminal }),
        notes,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c).unwrap()
    }

    #[test]
    fn step_on_worked_cubic() {
        let (c, f_tilde) = routh_step(&poly(&[6, 11, 6, 1])).unwrap();
        assert_eq!(c, rat(6, 11));
        assert_eq!(f_tilde.coeffs(), &[int(11), rat(60, 11), int(1)]);
    }

    #[test]
    fn step_examples() {
        let (c, f_tilde) = routh_step(&poly(&[1, 1])).unwrap();
        assert_eq!(c, int(1));
        assert_eq!(f_tilde, poly(&[1]));

        let (c, f_tilde) = routh_step(&poly(&[1, 1, 1, 1])).unwrap();
        assert_eq!(c, int(1));
        assert_eq!(f_tilde, poly(&[1, 0, 1]));
        assert!(matches!(routh_step(&f_tilde), Err(Error::DegenerateStep)));

        assert!(matches!(routh_step(&poly(&[0, 1])), Err(Error::RootAtOrigin)));
        assert!(matches!(routh_step(&poly(&[3])), Err(Error::ConstantPolynomial)));
    }

    #[test]
    fn chain_examples() {
        let chain = routh_chain(&poly(&[6, 11, 6, 1])).unwrap();
        assert_eq!(chain.cs, vec![rat(6, 11), rat(121, 60), rat(60, 11)]);
        assert_eq!(chain.terminal, int(1));

        let chain = routh_chain(&poly(&[1, 1])).unwrap();
        assert_eq!(chain.cs, vec![int(1)]);
        assert_eq!(chain.terminal, int(1));

        // chain mode keeps going through a negative parameter
        let chain = routh_chain(&poly(&[1, -1, 1])).unwrap();
        assert_eq!(chain.cs[0], int(-1));
        assert_eq!(chain.cs.len(), 2);
        assert!(!chain.all_positive());

        let err = routh_chain(&poly(&[1, 1, 1, 1])).unwrap_err();
        assert_eq!(err.failure, Failure::DegenerateStep(2));
        assert_eq!(err.partial, vec![int(1)]);

        let err = routh_chain(&poly(&[-1, 1])).unwrap_err();
        assert_eq!(err.failure, Failure::NonpositiveConstantTerm);

        let chain = routh_chain(&poly(&[4])).unwrap();
        assert!(chain.cs.is_empty());
        assert_eq!(chain.terminal, int(4));
    }

    #[test]
    fn verdict_examples() {
        let report = is_stable_routh(&poly(&[6, 11, 6, 1])).unwrap();
        assert_eq!(report.verdict, Verdict::Stable);
        assert_eq!(report.method, Method::Routh);
        match report.witness {
            Witness::Chain(chain) => {
                assert_eq!(chain.cs, vec![rat(6, 11), rat(121, 60), rat(60, 11)]);
                assert_eq!(chain.terminal, int(1));
            }
            other => panic!("unexpected witness {other:?}"),
        }

        let report = is_stable_routh(&poly(&[1, -1, 1])).unwrap();
        assert_eq!(report.verdict, Verdict::NotStable);
        assert!(matches!(
            report.witness,
            Witness::Failure { reason: Failure::NonpositiveC(1), .. }
        ));

        let report = is_stable_routh(&poly(&[1, 1, 1, 1])).unwrap();
        assert_eq!(report.verdict, Verdict::NotStable);
        assert!(matches!(
            report.witness,
            Witness::Failure { reason: Failure::DegenerateStep(2), .. }
        ));
    }

    #[test]
    fn sign_origin_and_constant_cases() {
        let report = is_stable_routh(&poly(&[-6, -11, -6, -1])).unwrap();
        assert!(report.is_stable());
        assert_eq!(report.notes, vec![Note::SignFlipped]);

        let report = is_stable_routh(&poly(&[0, 1])).unwrap();
        assert!(!report.is_stable());
        assert!(matches!(
            report.witness,
            Witness::Failure { reason: Failure::NonpositiveConstantTerm, .. }
        ));

        let report = is_stable_routh(&poly(&[5])).unwrap();
        assert!(report.is_stable());
        assert_eq!(report.notes, vec![Note::Vacuous]);

        let report = is_stable_routh(&poly(&[-5])).unwrap();
        assert!(report.is_stable());
        assert_eq!(report.notes, vec![Note::SignFlipped, Note::Vacuous]);

        assert!(matches!(is_stable_routh(&Polynomial::zero()), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn reconstruction_identities_hold_per_step() {
        let mut current = poly(&[6, 11, 6, 1]);
        while current.degree() > 0 {
            let (c, next) = routh_step(&current).unwrap();
            let EvenOddPair { p, q } = current.even_odd_split().unwrap();
            let EvenOddPair { p: p_t, q: q_t } = next.even_odd_split().unwrap();
            // p(x) = c p~(x) + x q~(x), q = p~
            assert_eq!(p, p_t.scale(&c).add(&q_t.shift(1)));
            assert_eq!(q, p_t);
            assert_eq!(next.degree() + 1, current.degree());
            current = next;
        }
    }
}
