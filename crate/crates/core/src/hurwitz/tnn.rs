//! Brute-force total nonnegativity check.
//!
//! Cost grows like `C(rows, r) * C(cols, r)` per order `r`; intended for
//! truncations of a dozen or so rows and orders up to about 4.

use itertools::Itertools;
use num::bigint::Sign;
use num::{BigInt, Integer, One};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{bareiss_sign, RationalMatrix};
use crate::poly::Scalar;

/// A negative minor. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorViolation {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TnnOutcome {
    pub ok: bool,
    pub minors_checked: u64,
    pub counterexample: Option<MinorViolation>,
}

/// Checks every minor of order `1..=max_order`.
///
/// Orders are scanned ascending, row sets and then column sets in
/// lexicographic order; the first negative minor in that order is reported
/// regardless of how the scan is scheduled.
pub fn all_minors_nonnegative(m: &RationalMatrix, max_order: usize) -> Result<TnnOutcome> {
    if max_order > m.rows().min(m.cols()) {
        return Err(Error::Dimension(format!(
            "minor order {max_order} exceeds {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    // a positive common multiple of denominators leaves every minor's sign unchanged
    let lcm = (0..m.rows())
        .flat_map(|r| m.row(r).iter())
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(|v| v.numer() * (&lcm / v.denom())).collect())
        .collect();

    let mut checked = 0u64;
    for order in 1..=max_order {
        let row_sets: Vec<Vec<usize>> = (0..m.rows()).combinations(order).collect();
        let col_sets: Vec<Vec<usize>> = (0..m.cols()).combinations(order).collect();
        let hit = row_sets.par_iter().find_map_first(|rows| {
            col_sets.iter().find_map(|cols| {
                let sub = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| scaled[r][c].clone()).collect())
                    .collect();
                (bareiss_sign(sub) == Sign::Minus).then(|| (rows.clone(), cols.clone()))
            })
        });
        if let Some((rows, cols)) = hit {
            let value = m.submatrix(&rows, &cols).determinant()?;
            return Ok(TnnOutcome {
                ok: false,
                minors_checked: checked,
                counterexample: Some(MinorViolation { rows, cols, value }),
            });
        }
        checked += (row_sets.len() * col_sets.len()) as u64;
    }
    Ok(TnnOutcome {
        ok: true,
        minors_checked: checked,
        counterexample: None,
    })
}
