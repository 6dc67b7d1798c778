//! One function per subcommand. Each returns an [`Outcome`] holding the
//! JSON report, a full text report, a one-line summary and the exit code.

use std::time::Instant;

use clap::ValueEnum;
use hurwitzkit::hermite_biehler::PhaseSign;
use hurwitzkit::{
    all_minors_nonnegative, condition_b, corpus, factorization_factors, hurwitz_truncation, is_stable_routh,
    leading_principal_minors, minor_criterion, oracle_stability, routh_chain, verify_full_factorization, EvenOddPair,
    Error, Generated, Kind, OracleClass, OracleVerdict, Polynomial, StabilityReport, Verdict, Witness,
};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::input::{format_coeffs, Order, PolynomialInput};
use crate::render;

pub const EXIT_STABLE: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_STABLE: i32 = 3;
pub const EXIT_BOUNDARY: i32 = 4;
pub const EXIT_DISAGREEMENT: i32 = 5;

/// Real-part range of roots drawn by the stable generator.
pub const DEFAULT_SPREAD: f64 = 4.0;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub summary: String,
    pub exit: i32,
}

impl Outcome {
    fn new(mut json: Value, text: String, summary: String, exit: i32) -> Self {
        json["exit"] = exit.into();
        Outcome {
            json,
            text,
            summary,
            exit,
        }
    }

    pub fn error(raw: &str, message: &str, exit: i32) -> Self {
        Outcome::new(
            json!({ "input": raw, "error": message }),
            format!("error: {message}"),
            format!("{raw}: error: {message}"),
            exit,
        )
    }
}

fn exit_for_error(e: &Error) -> i32 {
    match e {
        Error::Dimension(_) | Error::InvalidArgument(_) | Error::ZeroPolynomial | Error::EmptyInput => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

fn failed(input: &PolynomialInput, e: Error) -> Outcome {
    Outcome::error(&input.raw, &e.to_string(), exit_for_error(&e))
}

fn header(input: &PolynomialInput) -> Value {
    json!({
        "input": input.raw,
        "coeffs": render::scalars(input.parsed.coeffs()),
        "degree": input.parsed.degree(),
    })
}

fn verdict_exit(v: Verdict) -> i32 {
    match v {
        Verdict::Stable => EXIT_STABLE,
        Verdict::NotStable => EXIT_NOT_STABLE,
    }
}

fn oracle_exit(c: OracleClass) -> i32 {
    match c {
        OracleClass::Stable => EXIT_STABLE,
        OracleClass::NotStable => EXIT_NOT_STABLE,
        OracleClass::Boundary => EXIT_BOUNDARY,
    }
}

fn reject_zero(input: &PolynomialInput) -> Option<Outcome> {
    input
        .parsed
        .is_zero()
        .then(|| Outcome::error(&input.raw, "the zero polynomial has no stability verdict", EXIT_USAGE))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    All,
    Routh,
    Minors,
    Hb,
    Oracle,
}

impl MethodChoice {
    fn routh(self) -> bool {
        matches!(self, MethodChoice::All | MethodChoice::Routh)
    }
    fn minors(self) -> bool {
        matches!(self, MethodChoice::All | MethodChoice::Minors)
    }
    fn hb(self) -> bool {
        matches!(self, MethodChoice::All | MethodChoice::Hb)
    }
    fn oracle(self) -> bool {
        matches!(self, MethodChoice::All | MethodChoice::Oracle)
    }
}

struct Rendered {
    json: Value,
    text: String,
}

fn render_routh(report: &StabilityReport) -> (Value, Value, String) {
    match &report.witness {
        Witness::Chain(chain) => (
            json!({ "cs": render::scalars(&chain.cs), "b": render::scalar(&chain.terminal) }),
            Value::Null,
            format!("cs = {}, b = {}", render::list(&chain.cs), chain.terminal),
        ),
        Witness::Failure { reason, partial } => (
            json!({ "cs": render::scalars(partial), "b": Value::Null }),
            Value::String(reason.to_string()),
            format!("{reason} after cs = {}", render::list(partial)),
        ),
        _ => (Value::Null, Value::Null, String::new()),
    }
}

fn render_minors(report: &StabilityReport) -> (Value, Value, String) {
    match &report.witness {
        Witness::Minors { minors, factorization } => {
            let tail = match factorization {
                Some(true) => ", factorization verified",
                Some(false) => ", factorization FAILED",
                None => "",
            };
            let first = minors
                .first_nonpositive()
                .map(|j| format!(", first nonpositive minor {j}"))
                .unwrap_or_default();
            (
                render::scalars(&minors.values),
                factorization.map_or(Value::Null, Value::Bool),
                format!("{}{first}{tail}", render::list(&minors.values)),
            )
        }
        _ => (Value::Null, Value::Null, String::new()),
    }
}

/// The interlacing block for a report from [`condition_b`], computed on the
/// sign-normalized input like the report itself.
fn render_hb(report: &StabilityReport, f: &Polynomial) -> Rendered {
    let (g, _) = f.sign_normalized();
    match &report.witness {
        Witness::Interlacing { report: r, phase } => {
            let EvenOddPair { p, q } = g.even_odd_split().expect("nonzero input");
            let phase_text = match phase {
                PhaseSign::Indeterminate => String::new(),
                other => format!(", phase {}", render::phase(*other)),
            };
            Rendered {
                json: render::interlacing(r, &p, &q, Some(*phase)),
                text: format!("{}{phase_text}", render::interlacing_text(r, &p, &q)),
            }
        }
        Witness::Precondition(pre) => Rendered {
            json: json!({ "precondition": render::precondition(*pre), "verdict": false }),
            text: format!("precondition failed: {}", render::precondition(*pre)),
        },
        Witness::Vacuous => Rendered {
            json: json!({ "vacuous": true, "verdict": true }),
            text: "constant input, no roots".into(),
        },
        _ => Rendered {
            json: Value::Null,
            text: String::new(),
        },
    }
}

fn notes_of(reports: &[&StabilityReport]) -> Vec<&'static str> {
    let mut notes: Vec<&'static str> = reports.iter().flat_map(|r| r.notes.iter().map(|n| render::note(*n))).collect();
    notes.sort_unstable();
    notes.dedup();
    notes
}

type ExactReports = (Option<StabilityReport>, Option<StabilityReport>, Option<StabilityReport>);

fn run_exact(f: &Polynomial, method: MethodChoice) -> hurwitzkit::Result<ExactReports> {
    let run = |on: bool, test: fn(&Polynomial) -> hurwitzkit::Result<StabilityReport>| on.then(|| test(f)).transpose();
    Ok((
        run(method.routh(), is_stable_routh)?,
        run(method.minors(), minor_criterion)?,
        run(method.hb(), condition_b)?,
    ))
}

pub fn check(input: &PolynomialInput, method: MethodChoice, tol: f64) -> Outcome {
    if let Some(out) = reject_zero(input) {
        return out;
    }
    let f = &input.parsed;
    let start = Instant::now();
    let (routh, minors, hb) = match run_exact(f, method) {
        Ok(reports) => reports,
        Err(e) => return failed(input, e),
    };
    let oracle = method.oracle().then(|| oracle_stability(f, tol));
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;

    let exact_verdicts: Vec<Verdict> = [&routh, &minors, &hb].iter().filter_map(|r| r.as_ref().map(|r| r.verdict)).collect();
    let agreement = exact_verdicts.windows(2).all(|w| w[0] == w[1]);
    let oracle_class = oracle.as_ref().and_then(|o| o.as_ref().ok()).map(|o| o.class);
    let exit = if !agreement {
        EXIT_DISAGREEMENT
    } else if let Some(&v) = exact_verdicts.first() {
        verdict_exit(v)
    } else {
        match &oracle {
            Some(Ok(o)) => oracle_exit(o.class),
            _ => EXIT_INTERNAL,
        }
    };
    let oracle_consistent = match (exact_verdicts.first(), oracle_class) {
        (Some(_), None | Some(OracleClass::Boundary)) | (None, _) => None,
        (Some(v), Some(c)) => Some((*v == Verdict::Stable) == (c == OracleClass::Stable)),
    };

    let mut json = header(input);
    let mut lines = vec![format!("f(x) = {}   (degree {})", f, f.degree())];
    let mut verdicts = Map::new();
    let mut short = Vec::new();
    let mut push_line = |name: &str, verdict: &str, detail: String| {
        lines.push(format!("{name:<7} {verdict:<11} {detail}").trim_end().to_string());
        short.push(format!("{name} {verdict}"));
    };

    let (chain, failure, detail) = routh.as_ref().map_or((Value::Null, Value::Null, String::new()), render_routh);
    if let Some(r) = &routh {
        push_line("routh", &r.verdict.to_string(), detail);
    }
    verdicts.insert("routh".into(), routh.as_ref().map_or(Value::Null, |r| render::verdict(r.verdict)));

    let (minor_values, factorization, detail) =
        minors.as_ref().map_or((Value::Null, Value::Null, String::new()), render_minors);
    if let Some(r) = &minors {
        push_line("minors", &r.verdict.to_string(), detail);
    }
    verdicts.insert("minors".into(), minors.as_ref().map_or(Value::Null, |r| render::verdict(r.verdict)));

    let interlacing = match &hb {
        Some(r) => {
            let rendered = render_hb(r, f);
            push_line("hb", &r.verdict.to_string(), rendered.text);
            rendered.json
        }
        None => Value::Null,
    };
    verdicts.insert("hb".into(), hb.as_ref().map_or(Value::Null, |r| render::verdict(r.verdict)));

    let oracle_json = match &oracle {
        Some(Ok(o)) => {
            push_line("oracle", render::oracle_class(o.class), render::oracle_text(o));
            render::oracle(o)
        }
        Some(Err(e)) => {
            push_line("oracle", "failed", e.to_string());
            json!({ "error": e.to_string() })
        }
        None => Value::Null,
    };
    verdicts.insert("oracle".into(), oracle_class.map_or(Value::Null, |c| render::oracle_class(c).into()));

    let reports: Vec<&StabilityReport> = [&routh, &minors, &hb].into_iter().flatten().collect();
    let notes = notes_of(&reports);
    if !notes.is_empty() {
        lines.push(format!("notes: {}", notes.join(", ")));
    }
    if exact_verdicts.len() > 1 {
        lines.push(format!("agreement: {}", if agreement { "yes" } else { "NO" }));
    }

    json["verdicts"] = Value::Object(verdicts);
    json["chain"] = chain;
    json["failure"] = failure;
    json["minors"] = minor_values;
    json["factorization"] = factorization;
    json["interlacing"] = interlacing;
    json["oracle"] = oracle_json;
    json["agreement"] = agreement.into();
    json["oracle_consistent"] = oracle_consistent.map_or(Value::Null, Value::Bool);
    json["notes"] = notes.into();
    json["timing_ms"] = render::float(elapsed);

    let overall = match exit {
        EXIT_STABLE => "stable",
        EXIT_NOT_STABLE => "not_stable",
        EXIT_BOUNDARY => "boundary",
        EXIT_DISAGREEMENT => "DISAGREEMENT",
        _ => "error",
    };
    let summary = format!("{}: {overall} ({})", input.raw, short.join(", "));
    Outcome::new(json, lines.join("\n"), summary, exit)
}

pub fn factor(input: &PolynomialInput, rows: Option<usize>, cols: Option<usize>) -> Outcome {
    if let Some(out) = reject_zero(input) {
        return out;
    }
    let f = &input.parsed;
    let n = f.degree();
    let rows = rows.unwrap_or(2 * (n + 1));
    let cols = cols.unwrap_or(2 * (n + 1));
    let mut json = header(input);
    json["rows"] = rows.into();
    json["cols"] = cols.into();
    let chain = match routh_chain(f) {
        Ok(chain) => chain,
        Err(failure) => {
            json["chain"] = json!({ "cs": render::scalars(&failure.partial), "b": Value::Null });
            json["failure"] = failure.failure.to_string().into();
            json["verified"] = Value::Null;
            let text = format!(
                "chain failed: {} (accepted cs = {})",
                failure.failure,
                render::list(&failure.partial)
            );
            let summary = format!("{}: failed {}", input.raw, failure.failure);
            return Outcome::new(json, text, summary, EXIT_NOT_STABLE);
        }
    };
    let verified = match verify_full_factorization(f, rows, cols) {
        Ok(v) => v,
        Err(e) => return failed(input, e),
    };
    let (factors, tail) = factorization_factors(&chain.cs, &chain.terminal, rows, cols);
    let h = hurwitz_truncation(f, rows, cols);
    json["chain"] = json!({ "cs": render::scalars(&chain.cs), "b": render::scalar(&chain.terminal) });
    json["failure"] = Value::Null;
    json["verified"] = verified.into();
    json["hurwitz"] = render::matrix(&h);
    json["factors"] = factors.iter().map(render::matrix).collect::<Vec<_>>().into();
    json["terminal_matrix"] = render::matrix(&tail);
    let text = format!(
        "cs = {}\nb = {}\nH(f) = J(c_1) ... J(c_{n}) H(b) on {rows}x{cols}: {}\n\nH(f), {rows}x{cols}:\n{h}",
        render::list(&chain.cs),
        chain.terminal,
        if verified { "verified" } else { "FAILED" },
    );
    let summary = format!(
        "{}: cs = {}, b = {}, verified {verified}",
        input.raw,
        render::list(&chain.cs),
        chain.terminal
    );
    Outcome::new(json, text, summary, if verified { EXIT_STABLE } else { EXIT_DISAGREEMENT })
}

pub fn minors(input: &PolynomialInput, k: Option<usize>) -> Outcome {
    if let Some(out) = reject_zero(input) {
        return out;
    }
    let k = k.unwrap_or(input.parsed.degree() + 1);
    let seq = match leading_principal_minors(&input.parsed, k) {
        Ok(seq) => seq,
        Err(e) => return failed(input, e),
    };
    let mut json = header(input);
    json["k"] = k.into();
    json["minors"] = render::scalars(&seq.values);
    json["all_positive"] = seq.all_positive().into();
    let text = format!("minors 1..{k}: {}", render::list(&seq.values));
    let summary = format!("{}: {}", input.raw, render::list(&seq.values));
    Outcome::new(json, text, summary, EXIT_STABLE)
}

pub fn tnn(input: &PolynomialInput, rows: Option<usize>, cols: Option<usize>, order: Option<usize>) -> Outcome {
    if let Some(out) = reject_zero(input) {
        return out;
    }
    let n = input.parsed.degree();
    let rows = rows.unwrap_or(n + 3);
    let cols = cols.unwrap_or(n + 3);
    let order = order.unwrap_or(4.min(rows).min(cols));
    let h = hurwitz_truncation(&input.parsed, rows, cols);
    let outcome = match all_minors_nonnegative(&h, order) {
        Ok(o) => o,
        Err(e) => return failed(input, e),
    };
    let mut json = header(input);
    json["rows"] = rows.into();
    json["cols"] = cols.into();
    json["order"] = order.into();
    json["ok"] = outcome.ok.into();
    json["minors_checked"] = outcome.minors_checked.into();
    json["counterexample"] = outcome.counterexample.as_ref().map_or(Value::Null, render::violation);
    let verdict = match &outcome.counterexample {
        None => format!("ok, {} minors of order <= {order} are nonnegative", outcome.minors_checked),
        Some(v) => format!("negative minor: {}", render::violation_text(v)),
    };
    let text = format!("H(f) truncated to {rows}x{cols}: {verdict}");
    let summary = format!("{}: {verdict}", input.raw);
    Outcome::new(json, text, summary, if outcome.ok { EXIT_STABLE } else { EXIT_NOT_STABLE })
}

pub fn interlace(input: &PolynomialInput) -> Outcome {
    if let Some(out) = reject_zero(input) {
        return out;
    }
    let report = match condition_b(&input.parsed) {
        Ok(r) => r,
        Err(e) => return failed(input, e),
    };
    let rendered = render_hb(&report, &input.parsed);
    let mut json = header(input);
    json["verdict"] = render::verdict(report.verdict);
    json["interlacing"] = rendered.json;
    json["notes"] = notes_of(&[&report]).into();
    let text = format!("{}: {}", report.verdict, rendered.text);
    let summary = format!("{}: {text}", input.raw);
    Outcome::new(json, text, summary, verdict_exit(report.verdict))
}

pub fn roots(input: &PolynomialInput, tol: f64) -> Outcome {
    if let Some(out) = reject_zero(input) {
        return out;
    }
    let verdict: OracleVerdict = match oracle_stability(&input.parsed, tol) {
        Ok(v) => v,
        Err(e) => return failed(input, e),
    };
    let mut json = header(input);
    json["oracle"] = render::oracle(&verdict);
    let roots: Vec<String> = verdict.roots.roots.iter().map(|z| render::complex_text(z.re, z.im)).collect();
    let text = format!(
        "{}\nmargin {:.6e} (band {:.1e})\n{}",
        render::oracle_class(verdict.class),
        verdict.margin,
        verdict.tolerance,
        roots.join("\n")
    );
    let summary = format!("{}: {} {}", input.raw, render::oracle_class(verdict.class), render::oracle_text(&verdict));
    Outcome::new(json, text, summary, oracle_exit(verdict.class))
}

/// Settings shared by `generate` and `crosscheck`.
#[derive(Clone, Copy, Debug)]
pub struct CorpusSpec {
    pub count: usize,
    pub degree_max: usize,
    pub seed: u64,
    pub coeff_bound: i64,
}

impl CorpusSpec {
    pub fn build(&self) -> Vec<Generated> {
        corpus(self.count, self.degree_max, self.seed, self.coeff_bound, DEFAULT_SPREAD)
    }

    fn validate(&self) -> Option<Outcome> {
        let problem = if self.count == 0 {
            "--count must be at least 1"
        } else if self.degree_max == 0 {
            "--degree-max must be at least 1"
        } else if self.coeff_bound < 1 {
            "--coeff-bound must be at least 1"
        } else {
            return None;
        };
        Some(Outcome::error("", problem, EXIT_USAGE))
    }

    fn json(&self) -> Value {
        json!({
            "count": self.count,
            "degree_max": self.degree_max,
            "seed": self.seed,
            "coeff_bound": self.coeff_bound,
        })
    }
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Stable => "stable",
        Kind::Random => "random",
    }
}

pub fn generate(spec: CorpusSpec, order: Order) -> Outcome {
    if let Some(out) = spec.validate() {
        return out;
    }
    let items = spec.build();
    let lines: Vec<String> = items.iter().map(|g| format_coeffs(&g.polynomial, order)).collect();
    let mut json = spec.json();
    json["polynomials"] = items
        .iter()
        .map(|g| {
            json!({
                "kind": kind_name(g.kind),
                "seed": g.seed,
                "degree": g.polynomial.degree(),
                "coeffs": render::scalars(g.polynomial.coeffs()),
            })
        })
        .collect::<Vec<_>>()
        .into();
    let summary = format!("generated {} polynomials", items.len());
    Outcome::new(json, lines.join("\n"), summary, EXIT_STABLE)
}

/// Per-input result of the cross-validation run.
#[derive(Clone, Debug)]
pub struct CrossResult {
    pub index: usize,
    pub kind: Kind,
    pub polynomial: Polynomial,
    pub routh: Verdict,
    pub minors: Verdict,
    pub hb: Verdict,
    /// `None` when the root finder failed.
    pub oracle: Option<OracleClass>,
}

impl CrossResult {
    pub fn exact_agree(&self) -> bool {
        self.routh == self.minors && self.minors == self.hb
    }

    /// Outside the oracle's boundary band and with a converged oracle.
    pub fn oracle_decisive(&self) -> bool {
        matches!(self.oracle, Some(OracleClass::Stable | OracleClass::NotStable))
    }

    pub fn oracle_agrees(&self) -> bool {
        match self.oracle {
            Some(OracleClass::Stable) => self.routh == Verdict::Stable,
            Some(OracleClass::NotStable) => self.routh == Verdict::NotStable,
            _ => true,
        }
    }

    fn json(&self) -> Value {
        json!({
            "index": self.index,
            "kind": kind_name(self.kind),
            "coeffs": render::scalars(self.polynomial.coeffs()),
            "routh": render::verdict(self.routh),
            "minors": render::verdict(self.minors),
            "hb": render::verdict(self.hb),
            "oracle": self.oracle.map(render::oracle_class),
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct CrossSummary {
    pub total: usize,
    pub agreed: usize,
    /// Inputs left out of the oracle comparison: boundary band or root finder failure.
    pub excluded: usize,
    pub oracle_failures: usize,
    pub stable: usize,
    pub exact_disagreements: Vec<CrossResult>,
    pub oracle_disagreements: Vec<CrossResult>,
    /// Library errors on inputs, which should not happen for generated data.
    pub errors: Vec<(usize, String)>,
}

impl CrossSummary {
    pub fn disagreements(&self) -> usize {
        self.exact_disagreements.len() + self.oracle_disagreements.len()
    }
}

fn cross_one(index: usize, g: &Generated, tol: f64) -> Result<CrossResult, String> {
    let f = &g.polynomial;
    let verdict = |r: hurwitzkit::Result<StabilityReport>| r.map(|r| r.verdict).map_err(|e| e.to_string());
    Ok(CrossResult {
        index,
        kind: g.kind,
        polynomial: f.clone(),
        routh: verdict(is_stable_routh(f))?,
        minors: verdict(minor_criterion(f))?,
        hb: verdict(condition_b(f))?,
        oracle: oracle_stability(f, tol).ok().map(|v| v.class),
    })
}

/// Runs every method on every input in parallel; results keep input order.
pub fn cross_validate(items: &[Generated], tol: f64) -> CrossSummary {
    let results: Vec<Result<CrossResult, String>> =
        items.par_iter().enumerate().map(|(i, g)| cross_one(i, g, tol)).collect();
    let mut summary = CrossSummary {
        total: items.len(),
        ..CrossSummary::default()
    };
    for (i, result) in results.into_iter().enumerate() {
        let r = match result {
            Ok(r) => r,
            Err(e) => {
                summary.errors.push((i, e));
                continue;
            }
        };
        if r.oracle.is_none() {
            summary.oracle_failures += 1;
        }
        if r.routh == Verdict::Stable {
            summary.stable += 1;
        }
        let decisive = r.oracle_decisive();
        if !decisive {
            summary.excluded += 1;
        }
        if !r.exact_agree() {
            summary.exact_disagreements.push(r);
        } else if !r.oracle_agrees() {
            summary.oracle_disagreements.push(r);
        } else if decisive {
            summary.agreed += 1;
        }
    }
    summary
}

pub fn crosscheck(spec: CorpusSpec, tol: f64) -> Outcome {
    if let Some(out) = spec.validate() {
        return out;
    }
    let start = Instant::now();
    let summary = cross_validate(&spec.build(), tol);
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    let exit = if !summary.errors.is_empty() {
        EXIT_INTERNAL
    } else if summary.disagreements() > 0 {
        EXIT_DISAGREEMENT
    } else {
        EXIT_STABLE
    };
    let mut json = spec.json();
    json["tolerance"] = render::float(tol);
    json["total"] = summary.total.into();
    json["agreed"] = summary.agreed.into();
    json["excluded"] = summary.excluded.into();
    json["oracle_failures"] = summary.oracle_failures.into();
    json["stable_verdicts"] = summary.stable.into();
    json["disagreements"] = summary.disagreements().into();
    json["exact_disagreements"] = summary.exact_disagreements.iter().map(CrossResult::json).collect::<Vec<_>>().into();
    json["oracle_disagreements"] = summary.oracle_disagreements.iter().map(CrossResult::json).collect::<Vec<_>>().into();
    json["errors"] = summary
        .errors
        .iter()
        .map(|(i, e)| json!({ "index": i, "error": e }))
        .collect::<Vec<_>>()
        .into();
    json["timing_ms"] = render::float(elapsed);

    let mut lines = vec![
        format!("total         {}", summary.total),
        format!("agreed        {}", summary.agreed),
        format!("excluded      {} (oracle boundary band or root finder failure: {})", summary.excluded, summary.oracle_failures),
        format!("stable        {}", summary.stable),
        format!("disagreements {}", summary.disagreements()),
    ];
    for r in summary.exact_disagreements.iter().chain(&summary.oracle_disagreements) {
        lines.push(format!("  #{} {}: {}", r.index, format_coeffs(&r.polynomial, Order::Ascending), r.json()));
    }
    for (i, e) in &summary.errors {
        lines.push(format!("  #{i}: error {e}"));
    }
    let line = format!(
        "total {} agreed {} excluded {} disagreements {}",
        summary.total,
        summary.agreed,
        summary.excluded,
        summary.disagreements()
    );
    Outcome::new(json, lines.join("\n"), line, exit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_polynomial;

    fn input(text: &str) -> PolynomialInput {
        parse_polynomial(text, Order::Ascending).unwrap()
    }

    #[test]
    fn check_worked_cubic() {
        let out = check(&input("6 11 6 1"), MethodChoice::All, 1e-9);
        assert_eq!(out.exit, 0);
        let j = &out.json;
        assert_eq!(j["verdicts"], json!({"routh": "stable", "minors": "stable", "hb": "stable", "oracle": "stable"}));
        assert_eq!(j["chain"], json!({"cs": ["6/11", "121/60", "60/11"], "b": "1"}));
        assert_eq!(j["minors"], json!(["6", "66", "360", "360"]));
        assert_eq!(j["factorization"], true);
        assert_eq!(j["interlacing"]["verdict"], true);
        assert_eq!(j["agreement"], true);
        assert_eq!(j["exit"], 0);
    }

    #[test]
    fn check_exit_codes() {
        assert_eq!(check(&input("1 -1 1"), MethodChoice::All, 1e-9).exit, EXIT_NOT_STABLE);
        let routh_only = check(&input("1 -1 1"), MethodChoice::Routh, 1e-9);
        assert_eq!(routh_only.json["failure"], "NonpositiveC(1)");
        assert_eq!(routh_only.json["verdicts"]["minors"], Value::Null);
        assert_eq!(check(&input("1 0 1"), MethodChoice::Oracle, 1e-9).exit, EXIT_BOUNDARY);
        assert_eq!(check(&input("1 0 1"), MethodChoice::All, 1e-9).exit, EXIT_NOT_STABLE);
        assert_eq!(check(&input("0 0"), MethodChoice::All, 1e-9).exit, EXIT_USAGE);
        let constant = check(&input("5"), MethodChoice::All, 1e-9);
        assert_eq!(constant.exit, EXIT_STABLE);
        assert_eq!(constant.json["notes"], json!(["vacuous"]));
        let flipped = check(&input("-6 -11 -6 -1"), MethodChoice::All, 1e-9);
        assert_eq!(flipped.exit, EXIT_STABLE);
        assert_eq!(flipped.json["notes"], json!(["sign_flipped"]));
    }

    #[test]
    fn factor_examples() {
        let out = factor(&input("6 11 6 1"), None, None);
        assert_eq!(out.exit, 0);
        assert_eq!(out.json["chain"]["cs"], json!(["6/11", "121/60", "60/11"]));
        assert_eq!(out.json["verified"], true);
        assert_eq!(out.json["factors"].as_array().unwrap().len(), 3);
        let linear = factor(&input("1 1"), None, None);
        assert_eq!(linear.json["chain"], json!({"cs": ["1"], "b": "1"}));
        let bad = factor(&input("1 1 1 1"), None, None);
        assert_eq!(bad.exit, EXIT_NOT_STABLE);
        assert_eq!(bad.json["failure"], "DegenerateStep(2)");
    }

    #[test]
    fn minors_tnn_interlace_roots() {
        assert_eq!(minors(&input("6 11 6 1"), Some(4)).json["minors"], json!(["6", "66", "360", "360"]));
        let t = tnn(&input("6 11 6 1"), Some(6), Some(6), Some(3));
        assert_eq!((t.exit, t.json["ok"].clone()), (0, json!(true)));
        let bad_order = tnn(&input("6 11 6 1"), Some(2), Some(2), Some(3));
        assert_eq!(bad_order.exit, EXIT_USAGE);
        let i = interlace(&input("6 11 6 1"));
        assert_eq!(i.exit, 0);
        assert_eq!(i.json["interlacing"]["p_roots"][0]["exact"], "-1");
        assert_eq!(i.json["interlacing"]["q_roots"][0]["exact"], "-11");
        let r = roots(&input("-1 1"), 1e-9);
        assert_eq!(r.exit, EXIT_NOT_STABLE);
        assert!((r.json["oracle"]["roots"][0][0].as_f64().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn crosscheck_is_deterministic() {
        let spec = CorpusSpec {
            count: 60,
            degree_max: 6,
            seed: 42,
            coeff_bound: 20,
        };
        let a = crosscheck(spec, 1e-9);
        let mut b = crosscheck(spec, 1e-9);
        assert_eq!(a.exit, 0);
        b.json["timing_ms"] = a.json["timing_ms"].clone();
        assert_eq!(a.json, b.json);
        assert_eq!(a.json["disagreements"], 0);
        let empty = crosscheck(CorpusSpec { count: 0, ..spec }, 1e-9);
        assert_eq!(empty.exit, EXIT_USAGE);
    }

    #[test]
    fn generate_round_trips_through_the_parser() {
        let spec = CorpusSpec {
            count: 10,
            degree_max: 4,
            seed: 7,
            coeff_bound: 20,
        };
        for order in [Order::Ascending, Order::Descending] {
            let out = generate(spec, order);
            let parsed: Vec<Polynomial> = out.text.lines().map(|l| parse_polynomial(l, order).unwrap().parsed).collect();
            let expected: Vec<Polynomial> = spec.build().into_iter().map(|g| g.polynomial).collect();
            assert_eq!(parsed, expected);
        }
    }
}
