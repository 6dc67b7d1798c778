//! JSON and text renderings of library results.
//!
//! Rationals become strings (`"6"`, `"6/11"`), floats stay numbers.
//! Non-finite floats become `null`.

use hurwitzkit::hermite_biehler::{InterlacingReport, PhaseSign, Precondition};
use hurwitzkit::{
    MinorViolation, Note, OracleClass, OracleVerdict, Polynomial, RationalMatrix, RootIsolation, Scalar, Verdict,
};
use num::{One, Signed, Zero};
use serde_json::{json, Value};

pub fn scalar(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

pub fn scalars(xs: &[Scalar]) -> Value {
    Value::Array(xs.iter().map(scalar).collect())
}

pub fn float(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

pub fn matrix(m: &RationalMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|row| scalars(row)).collect())
}

pub fn list(xs: &[Scalar]) -> String {
    let items: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

pub fn verdict(v: Verdict) -> Value {
    Value::String(v.to_string())
}

pub fn oracle_class(c: OracleClass) -> &'static str {
    match c {
        OracleClass::Stable => "stable",
        OracleClass::NotStable => "not_stable",
        OracleClass::Boundary => "boundary",
    }
}

pub fn note(n: Note) -> &'static str {
    match n {
        Note::SignFlipped => "sign_flipped",
        Note::Vacuous => "vacuous",
    }
}

pub fn phase(p: PhaseSign) -> &'static str {
    match p {
        PhaseSign::Positive => "positive",
        PhaseSign::Negative => "negative",
        PhaseSign::Zero => "zero",
        PhaseSign::Indeterminate => "indeterminate",
    }
}

pub fn precondition(p: Precondition) -> &'static str {
    match p {
        Precondition::RootAtOrigin => "RootAtOrigin",
        Precondition::ZeroOddPart => "ZeroOddPart",
    }
}

/// The rational with smallest denominator in `[lo, hi]`, `lo <= hi`.
pub fn simplest_between(lo: &Scalar, hi: &Scalar) -> Scalar {
    if !lo.is_positive() && !hi.is_negative() {
        return Scalar::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let floor = lo.floor();
    if floor == *lo {
        return floor;
    }
    let next = &floor + Scalar::one();
    if next <= *hi {
        return next;
    }
    // both ends share the integer part: recurse on the reciprocals of the fractional parts
    let inner = simplest_between(&(hi - &floor).recip(), &(lo - &floor).recip());
    floor + inner.recip()
}

/// One isolated root: its interval, multiplicity and, when the root is a
/// rational that can be pinned down, its exact value.
pub struct RootReport {
    pub lo: Scalar,
    pub hi: Scalar,
    pub multiplicity: usize,
    pub exact: Option<Scalar>,
}

impl RootReport {
    pub fn approx(&self) -> f64 {
        match &self.exact {
            Some(x) => to_f64(x),
            None => (to_f64(&self.lo) + to_f64(&self.hi)) / 2.0,
        }
    }

    pub fn json(&self) -> Value {
        json!({
            "lo": scalar(&self.lo),
            "hi": scalar(&self.hi),
            "multiplicity": self.multiplicity,
            "exact": self.exact.as_ref().map(scalar),
            "approx": float(self.approx()),
        })
    }

    pub fn text(&self) -> String {
        let body = match &self.exact {
            Some(x) => x.to_string(),
            None => format!("({}, {}]", self.lo, self.hi),
        };
        if self.multiplicity > 1 {
            format!("{body} (x{})", self.multiplicity)
        } else {
            body
        }
    }
}

fn to_f64(x: &Scalar) -> f64 {
    num::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

/// Refines the isolation of the real roots of `g` and reports each root,
/// exactly when a rational root of small height lies in its interval.
pub fn roots_of(g: &Polynomial, isolation: &RootIsolation) -> Vec<RootReport> {
    let mut iso = isolation.clone();
    iso.refine_to_width(&Scalar::new(1.into(), (1u64 << 40).into()));
    iso.intervals
        .iter()
        .enumerate()
        .map(|(idx, interval)| {
            let exact = iso.exact_root(idx).or_else(|| {
                let candidate = simplest_between(&interval.lo, &interval.hi);
                let inside = candidate > interval.lo && candidate <= interval.hi;
                (inside && g.eval(&candidate).is_zero()).then_some(candidate)
            });
            RootReport {
                lo: interval.lo.clone(),
                hi: interval.hi.clone(),
                multiplicity: interval.multiplicity,
                exact,
            }
        })
        .collect()
}

pub fn interlacing(report: &InterlacingReport, p: &Polynomial, q: &Polynomial, phase_sign: Option<PhaseSign>) -> Value {
    let p_roots = roots_of(p, &report.p_roots);
    let q_roots = roots_of(q, &report.q_roots);
    json!({
        "p": scalars(p.coeffs()),
        "q": scalars(q.coeffs()),
        "p_roots": p_roots.iter().map(RootReport::json).collect::<Vec<_>>(),
        "q_roots": q_roots.iter().map(RootReport::json).collect::<Vec<_>>(),
        "all_real": report.all_real,
        "all_negative": report.all_negative,
        "all_simple": report.all_simple,
        "interlaced": report.interlaced,
        "rightmost_is_p": report.rightmost_is_p,
        "sign_condition": report.sign_condition,
        "coprime": report.coprime,
        "verdict": report.verdict,
        "phase": phase_sign.map(phase),
    })
}

pub fn interlacing_text(report: &InterlacingReport, p: &Polynomial, q: &Polynomial) -> String {
    let show = |roots: Vec<RootReport>| {
        let items: Vec<String> = roots.iter().map(RootReport::text).collect();
        format!("[{}]", items.join(", "))
    };
    let flags = [
        ("real", report.all_real),
        ("negative", report.all_negative),
        ("simple", report.all_simple),
        ("interlaced", report.interlaced),
        ("rightmost p", report.rightmost_is_p),
        ("p(0)q(0)>0", report.sign_condition),
        ("coprime", report.coprime),
    ];
    let failed: Vec<&str> = flags.iter().filter(|f| !f.1).map(|f| f.0).collect();
    let tail = if failed.is_empty() {
        String::new()
    } else {
        format!(", failed: {}", failed.join(", "))
    };
    format!(
        "p roots {}, q roots {}{tail}",
        show(roots_of(p, &report.p_roots)),
        show(roots_of(q, &report.q_roots))
    )
}

pub fn oracle(v: &OracleVerdict) -> Value {
    json!({
        "class": oracle_class(v.class),
        "margin": float(v.margin),
        "tolerance": float(v.tolerance),
        "iterations": v.roots.iterations,
        "max_residual": float(v.roots.max_residual()),
        "roots": v.roots.roots.iter().map(|z| json!([float(z.re), float(z.im)])).collect::<Vec<_>>(),
    })
}

pub fn complex_text(re: f64, im: f64) -> String {
    if im == 0.0 {
        format!("{re:.6}")
    } else if im < 0.0 {
        format!("{re:.6}-{:.6}i", -im)
    } else {
        format!("{re:.6}+{im:.6}i")
    }
}

pub fn oracle_text(v: &OracleVerdict) -> String {
    let roots: Vec<String> = v.roots.roots.iter().map(|z| complex_text(z.re, z.im)).collect();
    format!("margin {:.3e}, roots [{}]", v.margin, roots.join(", "))
}

/// Violations are reported with 1-based row and column indices.
pub fn violation(v: &MinorViolation) -> Value {
    json!({
        "rows": v.rows.iter().map(|r| r + 1).collect::<Vec<_>>(),
        "cols": v.cols.iter().map(|c| c + 1).collect::<Vec<_>>(),
        "value": scalar(&v.value),
    })
}

pub fn violation_text(v: &MinorViolation) -> String {
    let one_based = |xs: &[usize]| {
        let items: Vec<String> = xs.iter().map(|x| (x + 1).to_string()).collect();
        format!("{{{}}}", items.join(","))
    };
    format!("rows {} cols {} minor {}", one_based(&v.rows), one_based(&v.cols), v.value)
}
