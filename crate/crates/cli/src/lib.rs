//! Commands behind the `qsym` binary. Each command returns a [`RunReport`]
//! whose JSON payload depends only on its parameters.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use qsym_core::compositions::{count_e_catalan, enumerate_e_catalan};
use qsym_core::qsym::{expand_in_m, monomial_qsym};
use qsym_core::verify::{self, Bounds, Suite, VerifyReport};
use qsym_core::{Composition, GenComposition, Ideal, Monomial, Poly};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl From<qsym_core::Error> for CliError {
    fn from(e: qsym_core::Error) -> Self {
        match e {
            qsym_core::Error::Parse(_) => CliError::Usage(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Value,
    pub results: Value,
    /// Present for `verify`: whether every suite passed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub passed: Option<bool>,
    /// Human-readable rendering for `--pretty`.
    #[serde(skip)]
    pub pretty: String,
    /// Wall time; kept out of the JSON so repeated runs are byte-identical.
    #[serde(skip)]
    pub timing: Duration,
}

impl RunReport {
    fn new(command: &str, parameters: Value, results: Value, pretty: String) -> Self {
        RunReport {
            command: command.into(),
            parameters,
            results,
            passed: None,
            pretty,
            timing: Duration::ZERO,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.passed {
            Some(false) => 1,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn timed(start: Instant, mut report: RunReport) -> RunReport {
    report.timing = start.elapsed();
    report
}

fn count_value(c: &BigUint) -> Value {
    match u64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

fn poly_payload(p: &Poly) -> Value {
    json!({ "text": p.to_string(), "terms": p })
}

/// Quotient dimensions of `R_n^(e)` in degrees `0..=d_max` (default `n + e`).
pub fn cmd_hilbert(calc: &Ideal, n: usize, e: u32, d_max: Option<u32>) -> CliResult<RunReport> {
    let start = Instant::now();
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let d_max = d_max.unwrap_or(n as u32 + e);
    let table = calc.hilbert_function(n, e, d_max);
    let mut pretty = format!("n={n} e={e}\n");
    let _ = writeln!(pretty, "{:>6} {:>10} {:>10}", "degree", "dim", "paths");
    for (d, (dim, paths)) in table.dims.iter().zip(&table.catalan_by_degree).enumerate() {
        let _ = writeln!(pretty, "{d:>6} {dim:>10} {paths:>10}");
    }
    let _ = writeln!(
        pretty,
        "total {} bound {} equality {}",
        table.total, table.catalan_bound, table.equality
    );
    let params = json!({ "n": n, "e": e, "max_deg": d_max });
    let results = serde_json::to_value(&table).expect("table serializes");
    Ok(timed(start, RunReport::new("hilbert", params, results, pretty)))
}

/// Count of e-Catalan paths of length `n`, optionally listed with diagrams.
pub fn cmd_paths(n: usize, e: u32, list: bool) -> CliResult<RunReport> {
    let start = Instant::now();
    let count = count_e_catalan(n, e);
    let mut pretty = format!("n={n} e={e} count {count}\n");
    let mut results = json!({ "n": n, "e": e, "count": count_value(&count) });
    if list {
        let paths: Vec<Value> = enumerate_e_catalan(n, e)
            .into_iter()
            .map(|alpha| {
                let diagram = alpha.render_path();
                let _ = write!(pretty, "\n{}\n{}", render_gen(&alpha), diagram.text);
                json!({ "composition": render_gen(&alpha), "degree": alpha.degree(), "diagram": diagram.text })
            })
            .collect();
        results["paths"] = Value::Array(paths);
    }
    let params = json!({ "n": n, "e": e, "list": list });
    Ok(timed(start, RunReport::new("paths", params, results, pretty)))
}

fn render_gen(alpha: &GenComposition) -> String {
    if alpha.is_empty() {
        "-".into()
    } else {
        alpha.to_string()
    }
}

/// `G_α̃(x1..xn)`.
pub fn cmd_gfun(calc: &Ideal, alpha: &str, n: usize) -> CliResult<RunReport> {
    let start = Instant::now();
    let alpha: GenComposition = alpha.parse()?;
    let g = calc.family().gfun(&alpha, n)?;
    let params = json!({ "alpha": render_gen(&alpha), "n": n });
    let pretty = format!("{g}\n");
    Ok(timed(start, RunReport::new("gfun", params, poly_payload(&g), pretty)))
}

/// Normal form of the monomial with the given exponent vector.
pub fn cmd_normal_form(calc: &Ideal, monomial: &str, n: usize, e: u32) -> CliResult<RunReport> {
    let start = Instant::now();
    let alpha: GenComposition = monomial.parse()?;
    let m = Monomial::from_gen(&alpha, n)?;
    let nf = calc.normal_form(&Poly::monomial(m.clone()), n, e)?;
    let params = json!({ "monomial": render_gen(&alpha), "n": n, "e": e });
    let mut results = poly_payload(&nf);
    results["input"] = json!(m.to_string());
    let pretty = format!("{m} -> {nf}\n");
    Ok(timed(start, RunReport::new("normal-form", params, results, pretty)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    M,
    F,
}

impl std::str::FromStr for Basis {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "M" | "m" => Ok(Basis::M),
            "F" | "f" => Ok(Basis::F),
            _ => Err(CliError::Usage(format!("basis must be M or F, got {s:?}"))),
        }
    }
}

/// `M_α` or `F_α` in `n` variables; for `F` also the expansion in `M`.
pub fn cmd_expand(calc: &Ideal, alpha: &str, n: usize, basis: Basis) -> CliResult<RunReport> {
    let start = Instant::now();
    let alpha: Composition = alpha.parse()?;
    let (name, p) = match basis {
        Basis::M => ("M", monomial_qsym(&alpha, n)),
        Basis::F => ("F", (*calc.family().fundamental(&alpha, n)).clone()),
    };
    let shown = if alpha.is_empty() { "-".to_string() } else { alpha.to_string() };
    let params = json!({ "alpha": shown, "n": n, "basis": name });
    let mut results = poly_payload(&p);
    let mut pretty = format!("{name}_{shown} = {p}\n");
    if basis == Basis::F {
        let rows: Vec<Value> = expand_in_m(&alpha)
            .into_iter()
            .map(|(b, c)| json!({ "composition": b.to_string(), "coeff": c }))
            .collect();
        let sum: Vec<String> = expand_in_m(&alpha).iter().map(|(b, _)| format!("M_{b}")).collect();
        let _ = writeln!(pretty, "  = {}", sum.join(" + "));
        results["in_m"] = Value::Array(rows);
    }
    Ok(timed(start, RunReport::new("expand", params, results, pretty)))
}

/// A single suite by name, or every suite for `"all"`.
pub fn cmd_verify(calc: &Ideal, suite: &str, bounds: &Bounds) -> CliResult<RunReport> {
    let start = Instant::now();
    let reports: Vec<VerifyReport> = if suite == "all" {
        verify::run_all(calc, bounds)
    } else {
        let s: Suite = suite.parse()?;
        vec![verify::run(calc, s, bounds)]
    };
    let passed = reports.iter().all(VerifyReport::passed);
    let mut pretty = String::new();
    for r in &reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(
            pretty,
            "{:<14} {status} {:>8} instances {:>6} failures",
            r.suite,
            r.instances,
            r.failures.len()
        );
        for f in &r.failures {
            let _ = writeln!(pretty, "    {f}");
        }
    }
    let params = json!({ "suite": suite, "bounds": bounds });
    let results = serde_json::to_value(&reports).expect("reports serialize");
    let mut report = RunReport::new("verify", params, results, pretty);
    report.passed = Some(passed);
    Ok(timed(start, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hilbert_rejects_empty_window() {
        let calc = Ideal::new();
        assert_eq!(cmd_hilbert(&calc, 0, 0, None).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn error_codes() {
        let calc = Ideal::new();
        assert_eq!(cmd_gfun(&calc, "1,x", 2).unwrap_err().exit_code(), 2);
        assert_eq!(cmd_gfun(&calc, "1,0,1", 2).unwrap_err().exit_code(), 3);
        assert_eq!(cmd_verify(&calc, "nope", &Bounds::default()).unwrap_err().exit_code(), 2);
        assert!("Q".parse::<Basis>().is_err());
    }

    #[test]
    fn timing_stays_out_of_json() {
        let r = cmd_paths(3, 0, false).unwrap();
        assert!(!r.to_json().contains("timing"));
    }
}
