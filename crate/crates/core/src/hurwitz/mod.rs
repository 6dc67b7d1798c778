//! Finite truncations of the Hurwitz matrix `H(f)` and of the Routh factor
//! `J(c)`, the factorization `H(f) = J(c_1) ... J(c_n) H(b)`, and the
//! leading-principal-minor criterion.
//!
//! Indices below are 0-based. `H(f)` has entry `a_{2c - r}` at `(r, c)`, with
//! `a_j = 0` outside `0..=n`. `J(c)` has `c` at `(r, r)` on even rows and a `1`
//! at `(r, r + 1)` on every row.

mod tnn;

pub use tnn::{all_minors_nonnegative, MinorViolation, TnnOutcome};

use num::{One, Signed};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::poly::{Polynomial, Scalar};
use crate::report::{Method, Note, StabilityReport, Verdict, Witness};
use crate::routh::{routh_chain, routh_step};

/// `Δ_1, ..., Δ_k` of `H(f)`; `Δ_0 = 1` is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSequence {
    pub values: Vec<Scalar>,
}

impl MinorSequence {
    /// `Δ_j`, including `Δ_0 = 1`.
    pub fn get(&self, j: usize) -> Scalar {
        if j == 0 {
            Scalar::one()
        } else {
            self.values[j - 1].clone()
        }
    }

    pub fn all_positive(&self) -> bool {
        self.values.iter().all(Signed::is_positive)
    }

    /// 1-based index of the first nonpositive minor.
    pub fn first_nonpositive(&self) -> Option<usize> {
        self.values.iter().position(|v| !v.is_positive()).map(|i| i + 1)
    }
}

pub fn hurwitz_truncation(f: &Polynomial, rows: usize, cols: usize) -> RationalMatrix {
    RationalMatrix::from_fn(rows, cols, |r, c| {
        let index = 2 * c as isize - r as isize;
        if index < 0 {
            Scalar::default()
        } else {
            f.coeff(index as usize)
        }
    })
}

pub fn j_truncation(c: &Scalar, rows: usize, cols: usize) -> RationalMatrix {
    RationalMatrix::from_fn(rows, cols, |r, col| {
        if col == r + 1 {
            Scalar::one()
        } else if col == r && r % 2 == 0 {
            c.clone()
        } else {
            Scalar::default()
        }
    })
}

/// Checks `H(f) = J(c) H(f~)` on a `rows x cols` window for one Routh step.
pub fn verify_step_factorization(f: &Polynomial, rows: usize, cols: usize) -> Result<bool> {
    let (c, f_tilde) = routh_step(f)?;
    verify_step_with(f, &c, &f_tilde, rows, cols)
}

/// Same identity with an explicitly supplied step parameter and reduced polynomial.
pub fn verify_step_with(
    f: &Polynomial,
    c: &Scalar,
    f_tilde: &Polynomial,
    rows: usize,
    cols: usize,
) -> Result<bool> {
    let lhs = hurwitz_truncation(f, rows, cols);
    let rhs = j_truncation(c, rows, rows + 1).mul(&hurwitz_truncation(f_tilde, rows + 1, cols))?;
    Ok(lhs == rhs)
}

/// The `J(c_1), ..., J(c_n), H(b)` truncations whose product is the
/// `rows x cols` corner of `H(f)`.
///
/// Factor `k` (1-based) is `(rows + k - 1) x (rows + k)` and `H(b)` is
/// `(rows + n) x cols`. Row `i` of a `J` reads only rows `i` and `i + 1` of
/// its right neighbour, so the finite product equals the infinite one.
pub fn factorization_factors(
    cs: &[Scalar],
    terminal: &Scalar,
    rows: usize,
    cols: usize,
) -> (Vec<RationalMatrix>, RationalMatrix) {
    let factors = cs
        .iter()
        .enumerate()
        .map(|(k, c)| j_truncation(c, rows + k, rows + k + 1))
        .collect();
    let tail = hurwitz_truncation(&Polynomial::constant(terminal.clone()), rows + cs.len(), cols);
    (factors, tail)
}

pub fn factorization_product(cs: &[Scalar], terminal: &Scalar, rows: usize, cols: usize) -> Result<RationalMatrix> {
    let (factors, tail) = factorization_factors(cs, terminal, rows, cols);
    factors.iter().rev().try_fold(tail, |acc, j| j.mul(&acc))
}

/// Checks `H(f) = J(c_1) ... J(c_n) H(b)` on a `rows x cols` window.
pub fn verify_full_factorization(f: &Polynomial, rows: usize, cols: usize) -> Result<bool> {
    let chain = routh_chain(f).map_err(Error::Chain)?;
    let product = factorization_product(&chain.cs, &chain.terminal, rows, cols)?;
    Ok(product == hurwitz_truncation(f, rows, cols))
}

/// Exact leading principal minors `Δ_1, ..., Δ_k` of `H(f)`.
pub fn leading_principal_minors(f: &Polynomial, k: usize) -> Result<MinorSequence> {
    let h = hurwitz_truncation(f, k, k);
    let values = (1..=k)
        .map(|j| h.corner(j, j).determinant())
        .collect::<Result<Vec<_>>>()?;
    Ok(MinorSequence { values })
}

/// Stable iff `Δ_1, ..., Δ_{n+1}` are all positive.
///
/// When they are, the factorization through the Routh chain is also checked
/// on a `2(n+1)` square window and recorded in the witness.
pub fn minor_criterion(f: &Polynomial) -> Result<StabilityReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (f, flipped) = f.sign_normalized();
    let mut notes = Vec::new();
    if flipped {
        notes.push(Note::SignFlipped);
    }
    let n = f.degree();
    if n == 0 {
        notes.push(Note::Vacuous);
    }
    let minors = leading_principal_minors(&f, n + 1)?;
    let verdict = Verdict::from_bool(minors.all_positive());
    let factorization = if verdict.is_stable() {
        let size = 2 * (n + 1);
        Some(match routh_chain(&f) {
            Ok(chain) => {
                chain.all_positive()
                    && factorization_product(&chain.cs, &chain.terminal, size, size)?
                        == hurwitz_truncation(&f, size, size)
            }
            Err(_) => false,
        })
    } else {
        None
    };
    Ok(StabilityReport {
        verdict,
        method: Method::Minors,
        witness: Witness::Minors { minors, factorization },
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c).unwrap()
    }

    fn ints(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn hurwitz_truncation_examples() {
        assert_eq!(
            hurwitz_truncation(&poly(&[6, 11, 6, 1]), 4, 4),
            ints(&[&[6, 6, 0, 0], &[0, 11, 1, 0], &[0, 6, 6, 0], &[0, 0, 11, 1]])
        );
        assert_eq!(
            hurwitz_truncation(&poly(&[5]), 3, 3),
            ints(&[&[5, 0, 0], &[0, 0, 0], &[0, 5, 0]])
        );
        assert_eq!(hurwitz_truncation(&poly(&[1, 1]), 2, 3), ints(&[&[1, 0, 0], &[0, 1, 0]]));
    }

    #[test]
    fn j_truncation_examples() {
        assert_eq!(
            j_truncation(&int(2), 5, 6),
            ints(&[
                &[2, 1, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0, 0],
                &[0, 0, 2, 1, 0, 0],
                &[0, 0, 0, 0, 1, 0],
                &[0, 0, 0, 0, 2, 1],
            ])
        );
        assert_eq!(j_truncation(&int(0), 2, 3), ints(&[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(j_truncation(&int(1), 1, 2), ints(&[&[1, 1]]));
    }

    #[test]
    fn truncations_are_coherent() {
        let f = poly(&[3, -2, 7, 1, 4]);
        let big = hurwitz_truncation(&f, 9, 8);
        let j = j_truncation(&rat(5, 3), 9, 8);
        for r in 1..=9 {
            for c in 1..=8 {
                assert_eq!(big.corner(r, c), hurwitz_truncation(&f, r, c));
                assert_eq!(j.corner(r, c), j_truncation(&rat(5, 3), r, c));
            }
        }
    }

    #[test]
    fn step_factorization_examples() {
        assert!(verify_step_factorization(&poly(&[1, 1]), 4, 4).unwrap());
        assert!(verify_step_factorization(&poly(&[6, 11, 6, 1]), 6, 6).unwrap());

        let f = poly(&[1, 2, 1]);
        let (c, f_tilde) = routh_step(&f).unwrap();
        assert!(verify_step_with(&f, &c, &f_tilde, 5, 5).unwrap());
        assert!(!verify_step_with(&f, &(c + int(1)), &f_tilde, 5, 5).unwrap());
    }

    #[test]
    fn full_factorization_examples() {
        assert!(verify_full_factorization(&poly(&[6, 11, 6, 1]), 6, 6).unwrap());
        assert!(verify_full_factorization(&poly(&[1, 1]), 3, 3).unwrap());
        // negative parameters still factor exactly
        assert!(verify_full_factorization(&poly(&[1, -1, 1]), 5, 7).unwrap());
        assert!(matches!(
            verify_full_factorization(&poly(&[1, 1, 1, 1]), 4, 4),
            Err(Error::Chain(_))
        ));
    }

    #[test]
    fn minors_examples() {
        let m = leading_principal_minors(&poly(&[6, 11, 6, 1]), 4).unwrap();
        assert_eq!(m.values, vec![int(6), int(66), int(360), int(360)]);
        assert_eq!(leading_principal_minors(&poly(&[1, 1]), 2).unwrap().values, vec![int(1), int(1)]);
        assert_eq!(leading_principal_minors(&poly(&[5]), 2).unwrap().values, vec![int(5), int(0)]);
    }

    #[test]
    fn criterion_examples() {
        let report = minor_criterion(&poly(&[6, 11, 6, 1])).unwrap();
        assert!(report.is_stable());
        match report.witness {
            Witness::Minors { minors, factorization } => {
                assert_eq!(minors.values, vec![int(6), int(66), int(360), int(360)]);
                assert_eq!(factorization, Some(true));
            }
            other => panic!("unexpected witness {other:?}"),
        }

        let report = minor_criterion(&poly(&[1, -1, 1])).unwrap();
        assert!(!report.is_stable());
        match report.witness {
            Witness::Minors { minors, factorization } => {
                assert_eq!(minors.get(2), int(-1));
                assert_eq!(minors.first_nonpositive(), Some(2));
                assert_eq!(factorization, None);
            }
            other => panic!("unexpected witness {other:?}"),
        }

        let report = minor_criterion(&poly(&[1, 1, 1, 1])).unwrap();
        assert!(!report.is_stable());
        match report.witness {
            Witness::Minors { minors, .. } => assert_eq!(minors.get(3), int(0)),
            other => panic!("unexpected witness {other:?}"),
        }

        assert!(!minor_criterion(&poly(&[0, 1])).unwrap().is_stable());
        assert!(minor_criterion(&poly(&[5])).unwrap().is_stable());
        assert!(minor_criterion(&poly(&[-2, -3, -1])).unwrap().is_stable());
        assert!(minor_criterion(&Polynomial::zero()).is_err());
    }

    #[test]
    fn minor_recurrence_on_worked_cubic() {
        let f = poly(&[6, 11, 6, 1]);
        let (c, f_tilde) = routh_step(&f).unwrap();
        let outer = leading_principal_minors(&f, 4).unwrap();
        let inner = leading_principal_minors(&f_tilde, 4).unwrap();
        let scale = &c * f_tilde.constant_term();
        for j in 0..=3 {
            assert_eq!(outer.get(j + 1), &scale * inner.get(j));
        }
    }
}
