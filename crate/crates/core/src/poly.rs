//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending order, `coeffs[j]` multiplying `x^j`,
//! and are kept normalized: no trailing zeros except for the zero polynomial,
//! which is the single coefficient `0`.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Scalar = BigRational;

/// Shorthand for the rational `num / den`.
pub fn rat(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(value))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self::normalized(coeffs))
    }

    fn normalized(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Scalar::zero());
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Converts binary floating point coefficients exactly. Non-finite input is rejected.
    pub fn from_f64_exact(coeffs: &[f64]) -> Option<Result<Self>> {
        let exact: Option<Vec<Scalar>> = coeffs.iter().map(|&c| BigRational::from_float(c)).collect();
        exact.map(Self::new)
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![Scalar::zero()] }
    }

    pub fn constant(value: Scalar) -> Self {
        Self::normalized(vec![value])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = Scalar::one();
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Degree, with the zero polynomial reported as degree 0 (check [`is_zero`](Self::is_zero)).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    /// Coefficient of `x^j`; zero beyond the degree.
    pub fn coeff(&self, j: usize) -> Scalar {
        self.coeffs.get(j).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> &Scalar {
        &self.coeffs[self.coeffs.len() - 1]
    }

    pub fn constant_term(&self) -> &Scalar {
        &self.coeffs[0]
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// Splits `f(x) = p(x^2) + x q(x^2)`.
    pub fn even_odd_split(&self) -> Result<EvenOddPair> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.coeffs.iter().step_by(2).cloned().collect();
        let q: Vec<Scalar> = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        Ok(EvenOddPair {
            p: Self::normalized(p),
            q: Self::normalized(q),
        })
    }

    /// `p - c q`
    pub fn sub_scaled(p: &Polynomial, c: &Scalar, q: &Polynomial) -> Polynomial {
        let len = p.coeffs.len().max(q.coeffs.len());
        let coeffs = (0..len).map(|j| p.coeff(j) - c * q.coeff(j)).collect();
        Self::normalized(coeffs)
    }

    /// Shifts coefficients down one index; requires a zero constant term.
    pub fn divide_by_x(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        Ok(Self::normalized(self.coeffs[1..].to_vec()))
    }

    /// `g(-x^2)`
    pub fn substitute_neg_x_squared(&self) -> Polynomial {
        let mut coeffs = vec![Scalar::zero(); 2 * self.coeffs.len() - 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = if k % 2 == 0 { c.clone() } else { -c };
        }
        Self::normalized(coeffs)
    }

    pub fn derivative(&self) -> Polynomial {
        if self.is_constant() {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * int(j as i64))
            .collect();
        Self::normalized(coeffs)
    }

    pub fn scale(&self, factor: &Scalar) -> Polynomial {
        Self::normalized(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::normalized((0..len).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub(crate) fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::normalized(coeffs)
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let d = divisor.degree();
        let lead = divisor.leading().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Scalar::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let factor = &rem[k + d] / &lead;
            if factor.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &factor * c;
            }
            quot[k] = factor;
        }
        rem.truncate(d.max(1));
        Ok((Self::normalized(quot), Self::normalized(rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Scales to leading coefficient 1. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    /// Monic greatest common divisor by the Euclidean remainder sequence.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            // monic remainders keep coefficient growth in check
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// `true` when every coefficient is strictly positive.
    pub fn all_coeffs_positive(&self) -> bool {
        self.coeffs.iter().all(Signed::is_positive)
    }

    /// Applies `f -> -f` when the constant term is negative. Returns whether a flip happened.
    pub fn sign_normalized(&self) -> (Polynomial, bool) {
        if self.constant_term().is_negative() {
            (self.neg(), true)
        } else {
            (self.clone(), false)
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = j == 0 || !magnitude.is_one();
            let coeff_text = if magnitude.is_integer() {
                magnitude.to_string()
            } else {
                format!("({magnitude})")
            };
            match (j, show_coeff) {
                (0, _) => write!(f, "{coeff_text}")?,
                (1, true) => write!(f, "{coeff_text}x")?,
                (1, false) => f.write_str("x")?,
                (_, true) => write!(f, "{coeff_text}x^{j}")?,
                (_, false) => write!(f, "x^{j}")?,
            }
        }
        Ok(())
    }
}

/// The even and odd parts `(p, q)` of `f(x) = p(x^2) + x q(x^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenOddPair {
    pub p: Polynomial,
    pub q: Polynomial,
}

impl EvenOddPair {
    pub fn new(p: Polynomial, q: Polynomial) -> Self {
        EvenOddPair { p, q }
    }

    /// Interleaves `p` at even powers and `q` at odd powers.
    pub fn recombine(&self) -> Polynomial {
        let len = (2 * self.p.coeffs.len()).max(2 * self.q.coeffs.len() + 1);
        let coeffs = (0..len)
            .map(|j| {
                if j % 2 == 0 {
                    self.p.coeff(j / 2)
                } else {
                    self.q.coeff(j / 2)
                }
            })
            .collect();
        Polynomial::normalized(coeffs)
    }
}
