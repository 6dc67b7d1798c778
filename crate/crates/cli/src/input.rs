//! Coefficient parsing.
//!
//! Accepted literals are integers, fractions `p/q` and plain decimals
//! (`-0.125`), all converted exactly. Exponent notation is rejected so that
//! nothing is silently rounded.

use std::fmt;
use std::str::FromStr;

use hurwitzkit::{Polynomial, Scalar};
use num::{BigInt, One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Ascending,
    Descending,
}

/// A parsed input line, kept together with its raw text.
#[derive(Clone, Debug)]
pub struct PolynomialInput {
    pub raw: String,
    pub parsed: Polynomial,
    pub order: Order,
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(text.strip_prefix('+').unwrap_or(text)).ok()
}

pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let bad = || ParseError(format!("invalid coefficient {text:?}"));
    if let Some((num, den)) = text.split_once('/') {
        let num = parse_integer(num).ok_or_else(bad)?;
        let den = parse_integer(den).filter(|d| !d.is_zero()).ok_or_else(bad)?;
        return Ok(Scalar::new(num, den));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let negative = whole.starts_with('-');
        let whole_digits = whole.strip_prefix(['+', '-']).unwrap_or(whole);
        if frac.is_empty() && whole_digits.is_empty()
            || !whole_digits.bytes().all(|b| b.is_ascii_digit())
            || !frac.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let digits = format!("{whole_digits}{frac}");
        let numer = BigInt::from_str(&digits).map_err(|_| bad())?;
        let denom = (0..frac.len()).fold(BigInt::one(), |acc, _| acc * 10);
        let value = Scalar::new(numer, denom);
        return Ok(if negative { -value } else { value });
    }
    parse_integer(text).map(Scalar::from_integer).ok_or_else(bad)
}

/// Splits on whitespace and commas, dropping anything after `#`.
pub fn tokens(line: &str) -> Vec<&str> {
    let content = line.split('#').next().unwrap_or("");
    content
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect()
}

pub fn parse_polynomial(raw: &str, order: Order) -> Result<PolynomialInput, ParseError> {
    let mut coeffs = tokens(raw)
        .into_iter()
        .map(parse_scalar)
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.is_empty() {
        return Err(ParseError("no coefficients given".into()));
    }
    if order == Order::Descending {
        coeffs.reverse();
    }
    let parsed = Polynomial::new(coeffs).map_err(|e| ParseError(e.to_string()))?;
    Ok(PolynomialInput {
        raw: raw.split('#').next().unwrap_or("").trim().to_string(),
        parsed,
        order,
    })
}

/// Non-blank, non-comment lines of a batch file, with 1-based line numbers.
pub fn batch_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !tokens(line).is_empty())
        .map(|(i, line)| (i + 1, line))
        .collect()
}

/// Prints coefficients in the requested order, space separated.
pub fn format_coeffs(f: &Polynomial, order: Order) -> String {
    let mut parts: Vec<String> = f.coeffs().iter().map(ToString::to_string).collect();
    if order == Order::Descending {
        parts.reverse();
    }
    parts.join(" ")
}
