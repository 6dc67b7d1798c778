//! Floating-point ground truth: all complex roots by Aberth–Ehrlich iteration.
//!
//! Deliberately independent of the exact pipeline. Results near the imaginary
//! axis are classified as [`OracleClass::Boundary`] rather than decided.

use std::f64::consts::PI;

use num::complex::Complex64;
use num::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
const MAX_ITERATIONS: usize = 1000;
/// Backward error accepted when the step-size test never fires (clustered roots).
const ACCEPTABLE_BACKWARD_ERROR: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// Relative backward error `|f(z)| / sum |a_j| |z|^j` per root.
    pub residuals: Vec<f64>,
    pub iterations: usize,
}

impl RootSet {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// Largest real part, `-inf` without roots.
    pub fn margin(&self) -> f64 {
        self.roots.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OracleClass {
    Stable,
    NotStable,
    Boundary,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleVerdict {
    pub class: OracleClass,
    /// `max Re z_j`
    pub margin: f64,
    /// Effective band half-width, `tol * (1 + max |z_j|)`.
    pub tolerance: f64,
    pub roots: RootSet,
}

fn to_f64_coeffs(f: &Polynomial) -> Vec<f64> {
    f.coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect()
}

fn horner_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut value = Complex64::zero();
    let mut deriv = Complex64::zero();
    for &a in coeffs.iter().rev() {
        deriv = deriv * z + value;
        value = value * z + a;
    }
    (value, deriv)
}

fn backward_error(coeffs: &[f64], z: Complex64) -> f64 {
    let (value, _) = horner_with_derivative(coeffs, z);
    let r = z.norm();
    let scale = coeffs.iter().rev().fold(0.0, |acc, a| acc * r + a.abs());
    if scale == 0.0 {
        0.0
    } else {
        value.norm() / scale
    }
}

/// Starting points on a circle about the root centroid, with a small angular
/// offset so no start sits on the real axis.
fn initial_guesses(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let centroid = -coeffs[n - 1] / (n as f64 * lead);
    let radius = (1..=n)
        .map(|k| (coeffs[n - k] / lead).abs().powf(1.0 / k as f64))
        .fold(0.0, f64::max);
    let radius = if radius > 0.0 { radius } else { 1.0 };
    (0..n)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / n as f64 + 0.4;
            Complex64::new(centroid, 0.0) + Complex64::from_polar(radius, theta)
        })
        .collect()
}

/// All complex roots of `f`, sorted by real then imaginary part.
pub fn all_roots(f: &Polynomial) -> Result<RootSet> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.degree();
    if n == 0 {
        return Ok(RootSet {
            roots: Vec::new(),
            residuals: Vec::new(),
            iterations: 0,
        });
    }
    let coeffs = to_f64_coeffs(f);
    let mut z = initial_guesses(&coeffs);
    let mut done = vec![false; n];
    let mut iterations = 0;

    while iterations < MAX_ITERATIONS && !done.iter().all(|&d| d) {
        iterations += 1;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (value, deriv) = horner_with_derivative(&coeffs, z[i]);
            if value.is_zero() {
                done[i] = true;
                continue;
            }
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let denominator = deriv - value * repulsion;
            let step = if denominator.is_zero() {
                Complex64::new(1e-8 * (1.0 + z[i].norm()), 0.0)
            } else {
                value / denominator
            };
            z[i] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * (1.0 + z[i].norm()) {
                done[i] = true;
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        z[a].re
            .total_cmp(&z[b].re)
            .then(z[a].im.total_cmp(&z[b].im))
    });
    let roots: Vec<Complex64> = order.iter().map(|&i| z[i]).collect();
    let residuals = roots.iter().map(|&r| backward_error(&coeffs, r)).collect();
    let set = RootSet {
        roots,
        residuals,
        iterations,
    };
    let converged = done.iter().all(|&d| d) || set.max_residual() <= ACCEPTABLE_BACKWARD_ERROR;
    if !converged || set.roots.iter().any(|r| !r.is_finite()) {
        return Err(Error::NoConvergence {
            iterations,
            partial: set,
        });
    }
    Ok(set)
}

/// Classifies `f` by the largest real part of its roots.
pub fn oracle_stability(f: &Polynomial, tol: f64) -> Result<OracleVerdict> {
    let roots = all_roots(f)?;
    let margin = roots.margin();
    let tolerance = tol * (1.0 + roots.max_modulus());
    let class = if margin < -tolerance {
        OracleClass::Stable
    } else if margin > tolerance {
        OracleClass::NotStable
    } else {
        OracleClass::Boundary
    };
    Ok(OracleVerdict {
        class,
        margin,
        tolerance,
        roots,
    })
}
