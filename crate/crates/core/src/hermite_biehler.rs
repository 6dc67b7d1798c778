//! Stability through the even and odd parts.
//!
//! `f(x) = p(x^2) + x q(x^2)` is stable exactly when `p` and `q` have only
//! real, simple, negative zeros that strictly interlace with the rightmost
//! one belonging to `p`, `p(0) q(0) > 0`, and `gcd(p, q) = 1`. All root
//! ordering decisions are made with exact Sturm isolation.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{int, rat, EvenOddPair, Polynomial, Scalar};
use crate::report::{Method, Note, StabilityReport, Verdict, Witness};
use crate::sturm::{cauchy_bound, isolate_real_roots, squarefree_part, RootIsolation, SturmChain};

#[derive(Clone, Debug, PartialEq)]
pub struct InterlacingReport {
    pub p_roots: RootIsolation,
    pub q_roots: RootIsolation,
    /// Every zero of `p` and of `q` is real.
    pub all_real: bool,
    /// No real zero of `p` or `q` is `>= 0`.
    pub all_negative: bool,
    /// `p` and `q` are squarefree.
    pub all_simple: bool,
    /// Merged real zeros alternate between `p` and `q`.
    pub interlaced: bool,
    /// The largest real zero belongs to `p` (vacuously true without zeros).
    pub rightmost_is_p: bool,
    /// `p(0) q(0) > 0`
    pub sign_condition: bool,
    pub coprime: bool,
    pub verdict: bool,
}

/// Why the interlacing test could not be applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precondition {
    RootAtOrigin,
    ZeroOddPart,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhaseSign {
    Positive,
    Negative,
    Zero,
    /// `q` vanished at every attempted point.
    Indeterminate,
}

fn has_nonnegative_root(g: &Polynomial) -> Result<bool> {
    if g.constant_term().is_zero() {
        return Ok(true);
    }
    if g.degree() == 0 {
        return Ok(false);
    }
    Ok(SturmChain::new(g)?.count_half_open(&Scalar::zero(), &cauchy_bound(g)) > 0)
}

/// Which side of the merged root order a zero came from.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Owner {
    P,
    Q,
}

/// Refines the isolations of `p` and `q` until every zero of `p` is
/// separated from every distinct zero of `q`. Returns pairs `(i, j)` that are
/// the same root (a common zero, only possible when `gcd(p, q) != 1`).
fn separate(
    p_iso: &mut RootIsolation,
    q_iso: &mut RootIsolation,
    common: Option<&SturmChain>,
) -> Vec<(usize, usize)> {
    let mut shared = Vec::new();
    for i in 0..p_iso.intervals.len() {
        for j in 0..q_iso.intervals.len() {
            while p_iso.intervals[i].overlaps(&q_iso.intervals[j]) {
                let lo = p_iso.intervals[i].lo.clone().max(q_iso.intervals[j].lo.clone());
                let hi = p_iso.intervals[i].hi.clone().min(q_iso.intervals[j].hi.clone());
                if common.is_some_and(|c| c.count_half_open(&lo, &hi) > 0) {
                    shared.push((i, j));
                    break;
                }
                p_iso.refine(i);
                q_iso.refine(j);
            }
        }
    }
    shared
}

/// Checks the interlacing conditions on `p` and `q`. Violations are reported
/// through the flags; only zero inputs are errors.
pub fn interlacing_check(p: &Polynomial, q: &Polynomial) -> Result<InterlacingReport> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut p_roots = isolate_real_roots(p)?;
    let mut q_roots = isolate_real_roots(q)?;

    let all_real = p_roots.total_multiplicity() == p.degree() && q_roots.total_multiplicity() == q.degree();
    let all_simple = squarefree_part(p)?.degree() == p.degree() && squarefree_part(q)?.degree() == q.degree();
    let all_negative = !has_nonnegative_root(p)? && !has_nonnegative_root(q)?;
    let sign_condition = (p.constant_term() * q.constant_term()).is_positive();
    let gcd = p.gcd(q)?;
    let coprime = gcd.degree() == 0;

    let common = if coprime { None } else { Some(SturmChain::new(&gcd)?) };
    let shared = separate(&mut p_roots, &mut q_roots, common.as_ref());

    let mut merged: Vec<(Scalar, Owner)> = p_roots
        .intervals
        .iter()
        .map(|i| (i.lo.clone(), Owner::P))
        .chain(q_roots.intervals.iter().map(|i| (i.lo.clone(), Owner::Q)))
        .collect();
    merged.sort_by(|a, b| a.0.cmp(&b.0));
    let alternates = merged.windows(2).all(|w| w[0].1 != w[1].1);
    let interlaced = shared.is_empty() && alternates;

    let rightmost_is_p = match (p_roots.intervals.last(), q_roots.intervals.last()) {
        (None, None) => true,
        (Some(_), None) => true,
        (None, Some(_)) => false,
        (Some(pi), Some(qi)) => {
            let top = (p_roots.intervals.len() - 1, q_roots.intervals.len() - 1);
            !shared.contains(&top) && pi.lo >= qi.hi
        }
    };

    let verdict = all_real && all_negative && all_simple && interlaced && rightmost_is_p && sign_condition && coprime;
    Ok(InterlacingReport {
        p_roots,
        q_roots,
        all_real,
        all_negative,
        all_simple,
        interlaced,
        rightmost_is_p,
        sign_condition,
        coprime,
        verdict,
    })
}

/// Sign of `p(z^2) / (z q(z^2))` at a real `z > 0`.
///
/// If `q(z0^2) = 0` the point is moved along `3/2, 5/3, 7/4, ...`; `q` has
/// finitely many zeros, so `deg q + 2` attempts always find a usable point
/// unless `q` is identically zero.
pub fn phase_sign(f: &Polynomial, z0: &Scalar) -> Result<PhaseSign> {
    if !z0.is_positive() {
        return Err(Error::InvalidArgument(format!("z0 must be positive, got {z0}")));
    }
    let EvenOddPair { p, q } = f.even_odd_split()?;
    if q.is_zero() {
        return Ok(PhaseSign::Indeterminate);
    }
    let candidates = std::iter::once(z0.clone()).chain((1..).map(|k: i64| rat(2 * k + 1, k + 1)));
    for z in candidates.take(q.degree() + 2) {
        let z2 = &z * &z;
        let denominator = &z * q.eval(&z2);
        if denominator.is_zero() {
            continue;
        }
        let value = p.eval(&z2) / denominator;
        return Ok(if value.is_positive() {
            PhaseSign::Positive
        } else if value.is_negative() {
            PhaseSign::Negative
        } else {
            PhaseSign::Zero
        });
    }
    Ok(PhaseSign::Indeterminate)
}

/// Stability verdict from the interlacing conditions on the even and odd parts.
pub fn condition_b(f: &Polynomial) -> Result<StabilityReport> {
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
        method: Method::HermiteBiehler,
        witness,
        notes,
    };
    if f.constant_term().is_zero() {
        return Ok(report(
            Verdict::NotStable,
            Witness::Precondition(Precondition::RootAtOrigin),
            notes,
        ));
    }
    if f.degree() == 0 {
        notes.push(Note::Vacuous);
        return Ok(report(Verdict::Stable, Witness::Vacuous, notes));
    }
    let EvenOddPair { p, q } = f.even_odd_split()?;
    if q.is_zero() {
        return Ok(report(
            Verdict::NotStable,
            Witness::Precondition(Precondition::ZeroOddPart),
            notes,
        ));
    }
    let interlacing = interlacing_check(&p, &q)?;
    let phase = phase_sign(&f, &Scalar::one())?;
    Ok(report(
        Verdict::from_bool(interlacing.verdict),
        Witness::Interlacing {
            report: Box::new(interlacing),
            phase,
        },
        notes,
    ))
}

/// `lambda p(-x^2) + mu x q(-x^2)`
pub fn combination(f: &Polynomial, lambda: &Scalar, mu: &Scalar) -> Result<Polynomial> {
    if lambda.is_zero() && mu.is_zero() {
        return Err(Error::ZeroWeights);
    }
    let EvenOddPair { p, q } = f.even_odd_split()?;
    let even = p.substitute_neg_x_squared().scale(lambda);
    let odd = q.substitute_neg_x_squared().shift(1).scale(mu);
    Ok(even.add(&odd))
}

/// Whether `lambda p(-x^2) + mu x q(-x^2)` has only real roots, counted with
/// multiplicity. A combination that vanishes identically is not real-rooted.
pub fn combination_real_rooted(f: &Polynomial, lambda: &Scalar, mu: &Scalar) -> Result<bool> {
    let g = combination(f, lambda, mu)?;
    if g.is_zero() {
        return Ok(false);
    }
    Ok(isolate_real_roots(&g)?.total_multiplicity() == g.degree())
}

/// Default probe points for the phase sign.
pub fn default_phase_points() -> [Scalar; 4] {
    [int(1), rat(1, 2), int(2), int(3)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c).unwrap()
    }

    fn contains(iso: &RootIsolation, idx: usize, x: i64) -> bool {
        let i = &iso.intervals[idx];
        i.lo < int(x) && int(x) <= i.hi
    }

    #[test]
    fn interlacing_of_worked_cubic() {
        let r = interlacing_check(&poly(&[6, 6]), &poly(&[11, 1])).unwrap();
        assert!(r.verdict);
        assert!(r.all_real && r.all_negative && r.all_simple && r.interlaced);
        assert!(r.rightmost_is_p && r.sign_condition && r.coprime);
        assert!(contains(&r.p_roots, 0, -1));
        assert!(contains(&r.q_roots, 0, -11));
    }

    #[test]
    fn identical_parts_are_not_coprime() {
        let r = interlacing_check(&poly(&[1, 1]), &poly(&[1, 1])).unwrap();
        assert!(!r.verdict);
        assert!(!r.coprime);
        assert!(!r.interlaced);
        assert!(!r.rightmost_is_p);
    }

    #[test]
    fn non_interlacing_roots() {
        let r = interlacing_check(&poly(&[2, 3, 1]), &poly(&[3, 1])).unwrap();
        assert!(!r.verdict);
        assert!(r.rightmost_is_p);
        assert!(!r.interlaced);
        assert!(r.coprime && r.all_negative && r.all_simple && r.all_real);
    }

    #[test]
    fn complex_and_positive_roots_are_flagged() {
        let r = interlacing_check(&poly(&[1, 0, 1]), &poly(&[1])).unwrap();
        assert!(!r.all_real);
        let r = interlacing_check(&poly(&[-1, 1]), &poly(&[1])).unwrap();
        assert!(!r.all_negative);
        assert!(!r.sign_condition);
        assert!(interlacing_check(&Polynomial::zero(), &poly(&[1])).is_err());
    }

    #[test]
    fn close_roots_are_separated() {
        // p = (x + 1)(x + 3), q = x + 1 + 1/1000
        let q = Polynomial::new(vec![rat(1001, 1000), int(1)]).unwrap();
        let r = interlacing_check(&poly(&[3, 4, 1]), &q).unwrap();
        assert!(r.verdict);
        let q = Polynomial::new(vec![rat(999, 1000), int(1)]).unwrap();
        let r = interlacing_check(&poly(&[3, 4, 1]), &q).unwrap();
        assert!(!r.rightmost_is_p);
        assert!(!r.verdict);
    }

    #[test]
    fn condition_b_examples() {
        let report = condition_b(&poly(&[6, 11, 6, 1])).unwrap();
        assert!(report.is_stable());
        match &report.witness {
            Witness::Interlacing { phase, .. } => assert_eq!(*phase, PhaseSign::Positive),
            other => panic!("unexpected witness {other:?}"),
        }

        let report = condition_b(&poly(&[1, 0, 1])).unwrap();
        assert!(!report.is_stable());
        assert_eq!(report.witness, Witness::Precondition(Precondition::ZeroOddPart));

        let report = condition_b(&poly(&[1, 1, 1, 1])).unwrap();
        assert!(!report.is_stable());
        match &report.witness {
            Witness::Interlacing { report, .. } => assert!(!report.coprime),
            other => panic!("unexpected witness {other:?}"),
        }

        let report = condition_b(&poly(&[0, 1])).unwrap();
        assert_eq!(report.witness, Witness::Precondition(Precondition::RootAtOrigin));
        assert!(condition_b(&poly(&[5])).unwrap().is_stable());
        assert!(!condition_b(&poly(&[1, -1, 1])).unwrap().is_stable());
        assert!(condition_b(&Polynomial::zero()).is_err());
    }

    #[test]
    fn phase_sign_examples() {
        assert_eq!(phase_sign(&poly(&[1, 1]), &int(1)).unwrap(), PhaseSign::Positive);
        assert_eq!(phase_sign(&poly(&[6, 11, 6, 1]), &int(1)).unwrap(), PhaseSign::Positive);
        assert_eq!(phase_sign(&poly(&[1, -1]), &int(1)).unwrap(), PhaseSign::Negative);
        // q(x) = x - 1 vanishes at z0 = 1, the next point 3/2 gives p/q = 1/(3/2 * 5/4)
        assert_eq!(phase_sign(&poly(&[1, -1, 0, 1]), &int(1)).unwrap(), PhaseSign::Positive);
        assert_eq!(phase_sign(&poly(&[1, 0, 1]), &int(1)).unwrap(), PhaseSign::Indeterminate);
        assert!(phase_sign(&poly(&[1, 1]), &int(0)).is_err());
    }

    #[test]
    fn combination_examples() {
        let f = poly(&[6, 11, 6, 1]);
        assert_eq!(combination(&f, &int(1), &int(0)).unwrap(), poly(&[6, 0, -6]));
        assert!(combination_real_rooted(&f, &int(1), &int(0)).unwrap());
        assert_eq!(combination(&f, &int(0), &int(1)).unwrap(), poly(&[0, 11, 0, -1]));
        assert!(combination_real_rooted(&f, &int(0), &int(1)).unwrap());
        assert!(combination_real_rooted(&f, &rat(-3, 7), &int(5)).unwrap());

        // the property is one-directional: this unstable input still passes
        let g = poly(&[1, 0, 1]);
        assert!(combination_real_rooted(&g, &int(1), &int(0)).unwrap());
        assert!(combination_real_rooted(&g, &int(1), &int(1)).unwrap());
        // 1 + x^4 is unstable and p(-x^2) = 1 + x^4 has no real roots
        assert!(!combination_real_rooted(&poly(&[1, 0, 0, 0, 1]), &int(1), &int(0)).unwrap());

        assert!(matches!(combination(&f, &int(0), &int(0)), Err(Error::ZeroWeights)));
        assert!(!combination_real_rooted(&g, &int(0), &int(1)).unwrap());
    }
}
