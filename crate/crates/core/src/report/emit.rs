//! Rendering of pipeline results as JSON, CSV or plain text. Every renderer
//! is a pure function of its input, so identical inputs give identical bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::nf::NumberField;

use super::local::{FreyReport, Split2Report};
use super::{PipelineOutput, SurveyRow};
use crate::sunit::EntryReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct ValuationJson {
    lambda: i64,
    mu: i64,
}

#[derive(Serialize)]
struct SolutionJson {
    lambda: String,
    mu: String,
    valuations: Vec<ValuationJson>,
    #[serde(rename = "witness_P")]
    witness: Option<String>,
    t: Vec<u64>,
    passes: bool,
}

#[derive(Serialize)]
struct InvalidJson {
    line: usize,
    text: String,
    reason: String,
}

#[derive(Serialize)]
struct VerdictJson<'a> {
    field: &'a str,
    verdict: crate::criterion::Verdict,
    complete: bool,
    method: String,
    search_box: Option<u32>,
    generators: crate::sunit::Completeness,
    #[serde(rename = "S")]
    s: Vec<String>,
    #[serde(rename = "T")]
    t: Vec<String>,
    #[serde(rename = "bound_per_P")]
    bounds: Vec<u64>,
    solutions: Vec<SolutionJson>,
    max_valuation: u64,
    invalid_entries: Vec<InvalidJson>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn solution_rows(k: &NumberField, out: &PipelineOutput) -> Vec<SolutionJson> {
    out.verdict
        .checks
        .iter()
        .map(|c| SolutionJson {
            lambda: k.fmt_element(c.solution.lambda()),
            mu: k.fmt_element(c.solution.mu()),
            valuations: c
                .solution
                .valuations()
                .iter()
                .map(|v| ValuationJson { lambda: v.lambda, mu: v.mu })
                .collect(),
            witness: c.witness.map(|i| out.st.s()[i].describe(k)),
            t: c.solution.t_values().to_vec(),
            passes: c.passes(),
        })
        .collect()
}

fn invalid_rows(out: &PipelineOutput) -> Vec<InvalidJson> {
    out.list
        .iter()
        .flat_map(|l| &l.entries)
        .filter_map(|e| match e {
            EntryReport::Invalid { line, text, reason } => Some(InvalidJson {
                line: *line,
                text: text.clone(),
                reason: reason.to_string(),
            }),
            EntryReport::Valid { .. } => None,
        })
        .collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

/// Verdict of a `check` run.
pub fn emit_verdict(out: &PipelineOutput, format: Format) -> String {
    let k = &out.field;
    let solutions = solution_rows(k, out);
    let max_valuation = out
        .verdict
        .checks
        .iter()
        .map(|c| c.solution.max_valuation())
        .max()
        .unwrap_or(0);
    let report = VerdictJson {
        field: &out.verdict.field,
        verdict: out.verdict.verdict,
        complete: out.verdict.complete,
        method: out.method.to_string(),
        search_box: out.search_box,
        generators: out.generators,
        s: out.st.s().iter().map(|p| p.describe(k)).collect(),
        t: out.st.t().map(|p| p.describe(k)).collect(),
        bounds: out.verdict.bounds.clone(),
        solutions,
        max_valuation,
        invalid_entries: invalid_rows(out),
    };
    match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = String::from("lambda,mu,valuations,t,witness_P,passes\n");
            for r in &report.solutions {
                let vals: Vec<String> = r.valuations.iter().map(|v| format!("{}:{}", v.lambda, v.mu)).collect();
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    csv_field(&r.lambda),
                    csv_field(&r.mu),
                    csv_field(&vals.join(";")),
                    csv_field(&join(&r.t, ";")),
                    csv_field(r.witness.as_deref().unwrap_or("")),
                    r.passes
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "field:     {}", report.field);
            let _ = writeln!(s, "verdict:   {}", report.verdict);
            let _ = writeln!(s, "complete:  {}", report.complete);
            let method = match report.search_box {
                Some(b) => format!("{} (box {b})", report.method),
                None => report.method.clone(),
            };
            let _ = writeln!(s, "method:    {method}");
            let _ = writeln!(s, "S:         {}", report.s.join(" "));
            let _ = writeln!(s, "T:         {}", report.t.join(" "));
            let _ = writeln!(s, "bounds:    {}", join(&report.bounds, " "));
            let _ = writeln!(s, "solutions: {} (max valuation {})", report.solutions.len(), report.max_valuation);
            for r in &report.solutions {
                let mark = if r.passes { "pass" } else { "FAIL" };
                let _ = writeln!(s, "  {mark}  lambda = {}  mu = {}  t = [{}]", r.lambda, r.mu, join(&r.t, ", "));
            }
            if !report.invalid_entries.is_empty() {
                let _ = writeln!(s, "invalid entries: {}", report.invalid_entries.len());
                for e in &report.invalid_entries {
                    let _ = writeln!(s, "  line {}: {} ({})", e.line, e.text, e.reason);
                }
            }
            s
        }
    }
}

fn max_t_string(row: &SurveyRow) -> String {
    row.max_t.map_or_else(String::new, |t| t.to_string())
}

pub fn emit_survey(rows: &[SurveyRow], format: Format) -> String {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Survey<'a> {
                survey: &'a [SurveyRow],
            }
            to_json(&Survey { survey: rows })
        }
        Format::Csv => {
            let mut s = String::from("d,splitting,verdict,solutions,max_t\n");
            for r in rows {
                let _ = writeln!(s, "{},{},{},{},{}", r.d, r.splitting, r.verdict, r.solutions, max_t_string(r));
            }
            s
        }
        Format::Text => {
            let mut s = format!("{:>6}  {:<9} {:<15} {:>9}  {:>5}\n", "d", "splitting", "verdict", "solutions", "max_t");
            for r in rows {
                let _ = writeln!(
                    s,
                    "{:>6}  {:<9} {:<15} {:>9}  {:>5}",
                    r.d,
                    r.splitting.to_string(),
                    r.verdict.to_string(),
                    r.solutions,
                    max_t_string(r)
                );
            }
            s
        }
    }
}

pub fn emit_split2(report: &Split2Report, format: Format) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            let mut s = String::from("ideal,e,f,in_t,bound,conductor_bound\n");
            for p in &report.primes {
                let bound = p.bound.map_or_else(String::new, |b| b.to_string());
                let _ = writeln!(s, "{},{},{},{},{},{}", csv_field(&p.ideal), p.e, p.f, p.in_t, bound, p.conductor_bound);
            }
            s
        }
        Format::Text => {
            let mut s = format!("field: {}\n2 is {}\n", report.field, report.splitting);
            for p in &report.primes {
                let t = match p.bound {
                    Some(b) => format!("in T, bound {b}"),
                    None => "not in T".to_string(),
                };
                let _ = writeln!(
                    s,
                    "  {}  e = {}  f = {}  {t}  conductor exponent <= {}",
                    p.ideal, p.e, p.f, p.conductor_bound
                );
            }
            s
        }
    }
}

pub fn emit_frey(report: &FreyReport, format: Format) -> String {
    let opt = |x: Option<i64>| x.map_or_else(String::new, |v| v.to_string());
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            let mut s = String::from("ideal,ord_a,ord_b,ord_c,ord_j,closed_form,inertia_orders,conductor_bound\n");
            for q in &report.primes {
                let orders = q
                    .inertia
                    .as_ref()
                    .map_or_else(String::new, |i| join(&i.orders.iter().collect::<Vec<_>>(), ";"));
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{}",
                    csv_field(&q.ideal),
                    q.ord_a,
                    q.ord_b,
                    q.ord_c,
                    opt(q.ord_j),
                    opt(q.closed_form),
                    orders,
                    q.conductor_bound
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "field:  {}", report.field);
            let _ = writeln!(s, "triple: a = {}, b = {}, c = {}, p = {}", report.a, report.b, report.c, report.p);
            let _ = writeln!(s, "a^p + b^p + c^p = 0: {}", report.fermat);
            let _ = writeln!(s, "c4 = {}", report.c4);
            let _ = writeln!(s, "Delta = {}", report.delta);
            let _ = writeln!(s, "j = {}", report.j);
            for q in &report.primes {
                let _ = writeln!(
                    s,
                    "  {}: ord(a, b, c) = ({}, {}, {})  ord(j) = {}",
                    q.ideal,
                    q.ord_a,
                    q.ord_b,
                    q.ord_c,
                    q.ord_j.map_or_else(|| "inf".to_string(), |v| v.to_string())
                );
                if let Some(c) = q.closed_form {
                    let _ = writeln!(s, "    8 ord(2) - 2p ord(b) = {c}");
                }
                if let Some(i) = &q.inertia {
                    let _ = writeln!(
                        s,
                        "    {} reduction, inertia order in {{{}}}",
                        i.reduction,
                        join(&i.orders.iter().collect::<Vec<_>>(), ", ")
                    );
                }
                let _ = writeln!(s, "    conductor exponent <= {}", q.conductor_bound);
            }
            s
        }
    }
}
