//! Configuration, pipelines and report emission for the `aflt` binary.

mod config;
mod emit;
mod local;

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

pub use config::FieldConfig;
pub use emit::{emit_frey, emit_split2, emit_survey, emit_verdict, Format};
pub use local::{frey_report, split2_report, FreyPrime, FreyReport, PrimeAboveTwo, Split2Report};

use crate::arith::int;
use crate::criterion::{criterion_check, FieldVerdict};
use crate::error::{Error, Result};
use crate::nf::{FieldElement, FieldKind, NumberField};
use crate::sunit::{
    bounded_search, compute_st, parse_solution_list, solve_iq_ramified, sunit_describe, verify_solution_list,
    Completeness, ListReport, STSets, SUnitSolution,
};

/// Largest number of exponent vectors the default search box may produce.
const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000;

/// How the solution set behind a verdict was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Complete enumeration with a proven exponent bound.
    Exact,
    BoundedSearch,
    SolutionList,
    BoundedSearchAndList,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::BoundedSearch => "bounded-search",
            Method::SolutionList => "solution-list",
            Method::BoundedSearchAndList => "bounded-search+solution-list",
        })
    }
}

/// Everything a `check` run produces.
#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub field: NumberField,
    pub st: STSets,
    pub method: Method,
    /// Exponent box of the bounded search, if one ran.
    pub search_box: Option<u32>,
    pub generators: Completeness,
    pub verdict: FieldVerdict,
    /// Verification report of a supplied solution list.
    pub list: Option<ListReport>,
}

/// Whether the exact solver covers `k`: imaginary quadratic with
/// `-d ≡ 2, 3 (mod 4)`.
pub fn is_iq_ramified_family(k: &NumberField) -> bool {
    k.is_imaginary_quadratic() && matches!(k.parameter().rem_euclid(4), 2 | 3)
}

/// Largest box in `1..=3` whose enumeration stays within the default budget.
fn default_box(torsion_order: u32, generators: usize) -> u32 {
    (1..=3u32)
        .rev()
        .find(|&b| {
            let width = 2 * b as u64 + 1;
            width
                .checked_pow(generators as u32)
                .and_then(|w| w.checked_mul(torsion_order as u64))
                .is_some_and(|n| n <= DEFAULT_SEARCH_BUDGET)
        })
        .unwrap_or(1)
}

/// Run the pipeline `S, T → solutions → criterion` for one configuration.
///
/// Imaginary quadratic fields with `-d ≡ 2, 3 (mod 4)` use the exact solver.
/// Otherwise a supplied solution list is verified, and a bounded search runs
/// when a box was requested or no list was given. Only a list declared
/// complete (and used on its own) yields a complete solution set.
pub fn run_pipeline(config: &FieldConfig) -> Result<PipelineOutput> {
    let text = match &config.solutions {
        Some(path) => Some(
            std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
        ),
        None => None,
    };
    run_pipeline_with_list(config, text.as_deref())
}

/// [`run_pipeline`] with the solution list given as text; the config's own
/// list path is ignored.
pub fn run_pipeline_with_list(config: &FieldConfig, list_text: Option<&str>) -> Result<PipelineOutput> {
    let k = config.field()?;
    let st = compute_st(&k);
    let desc = sunit_describe(&k, &st)?;
    let list = match list_text {
        Some(text) => {
            let entries = parse_solution_list(&k, text);
            Some(verify_solution_list(&k, &st, &entries)?)
        }
        None => None,
    };

    let mut solutions: Vec<SUnitSolution> = Vec::new();
    let (method, complete, search_box) = if is_iq_ramified_family(&k) {
        let exact = solve_iq_ramified(&k)?;
        solutions.extend(exact.solutions);
        (Method::Exact, exact.complete, None)
    } else {
        let run_search = config.search_box.is_some() || list.is_none();
        let mut search_box = None;
        if run_search {
            let mut extra = Vec::new();
            for g in &config.extra_generators {
                extra.push(k.parse_element(&g.join(";")).map_err(|msg| Error::parse(0, msg))?);
            }
            let desc = desc.clone().with_extra_generators(extra);
            let b = config
                .search_box
                .unwrap_or_else(|| default_box(desc.torsion_order(), desc.generators().len()));
            solutions.extend(bounded_search(&k, &st, &desc, b)?.solutions);
            search_box = Some(b);
        }
        if let Some(report) = &list {
            solutions.extend(report.valid().cloned());
        }
        let method = match (run_search, list.is_some()) {
            (true, true) => Method::BoundedSearchAndList,
            (true, false) => Method::BoundedSearch,
            _ => Method::SolutionList,
        };
        let complete = method == Method::SolutionList && config.solutions_complete;
        (method, complete, search_box)
    };
    let verdict = criterion_check(&k, &st, &solutions, complete);
    Ok(PipelineOutput {
        field: k,
        st,
        method,
        search_box,
        generators: desc.completeness(),
        verdict,
        list,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Splitting {
    Inert,
    Split,
    Ramified,
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Splitting::Inert => "inert",
            Splitting::Split => "split",
            Splitting::Ramified => "ramified",
        })
    }
}

/// Splitting type of 2 read off from the actual factorisation.
pub fn splitting_of_two(st: &STSets) -> Splitting {
    match st.s() {
        [p] if p.ramification_index() > 1 => Splitting::Ramified,
        [p] if p.residue_degree() > 1 => Splitting::Inert,
        _ => Splitting::Split,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub d: u64,
    pub splitting: Splitting,
    pub verdict: crate::criterion::Verdict,
    pub solutions: usize,
    /// Largest `t_P` over all solutions and primes of T; `None` if T is empty.
    pub max_t: Option<u64>,
}

/// Survey `Q(sqrt(-d))` for squarefree `d` in `[d_min, d_max]`, in
/// ascending `d` regardless of the order in which rows finish.
pub fn run_survey(d_min: u64, d_max: u64) -> Result<Vec<SurveyRow>> {
    if d_min < 1 || d_min > d_max {
        return Err(Error::Range(format!("need 1 <= min <= max, got [{d_min}, {d_max}]")));
    }
    if d_max > i64::MAX as u64 {
        return Err(Error::Range(format!("max {d_max} is too large")));
    }
    let ds: BTreeSet<u64> = (d_min..=d_max)
        .filter(|&d| int::is_squarefree(-(d as i64)))
        .collect();
    ds.into_par_iter()
        .map(|d| {
            let config = FieldConfig::for_field(FieldKind::Quadratic, -(d as i64));
            let out = run_pipeline(&config)?;
            let max_t = (!out.st.t_is_empty()).then(|| {
                out.verdict
                    .checks
                    .iter()
                    .flat_map(|c| c.solution.t_values().iter().copied())
                    .max()
                    .unwrap_or(0)
            });
            Ok(SurveyRow {
                d,
                splitting: splitting_of_two(&out.st),
                verdict: out.verdict.verdict,
                solutions: out.verdict.checks.len(),
                max_t,
            })
        })
        .collect()
}

/// Parse a comma-separated triple of field elements, each written as
/// power-basis coordinates `c0;c1;...` or as a single rational.
pub fn parse_triple(k: &NumberField, text: &str) -> Result<[FieldElement; 3]> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::parse(0, format!("expected three comma-separated elements, got {}", parts.len())));
    }
    let mut out = Vec::with_capacity(3);
    for p in parts {
        out.push(k.parse_element(p).map_err(|msg| Error::parse(0, msg))?);
    }
    Ok(out.try_into().expect("three elements"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criterion::Verdict;

    #[test]
    fn pipeline_examples() {
        let out = run_pipeline(&FieldConfig::for_field(FieldKind::Quadratic, -5)).unwrap();
        assert_eq!(out.verdict.verdict, Verdict::Holds);
        assert_eq!(out.verdict.checks.len(), 3);
        assert_eq!(out.method, Method::Exact);

        let out = run_pipeline(&FieldConfig::for_field(FieldKind::Quadratic, -3)).unwrap();
        assert_eq!(out.verdict.verdict, Verdict::NotApplicable);

        let out = run_pipeline(&FieldConfig::for_field(FieldKind::Quadratic, -7)).unwrap();
        assert_eq!(out.verdict.verdict, Verdict::Unknown);
        assert_eq!(out.method, Method::BoundedSearch);
    }

    #[test]
    fn survey_first_ten() {
        let rows = run_survey(1, 10).unwrap();
        let ds: Vec<u64> = rows.iter().map(|r| r.d).collect();
        assert_eq!(ds, [1, 2, 3, 5, 6, 7, 10]);
        for r in &rows {
            let expected = match r.d {
                3 => Verdict::NotApplicable,
                7 => Verdict::Unknown,
                _ => Verdict::Holds,
            };
            assert_eq!(r.verdict, expected, "d = {}", r.d);
        }
        let five = rows.iter().find(|r| r.d == 5).unwrap();
        assert_eq!((five.solutions, five.max_t), (3, Some(2)));
        assert!(matches!(run_survey(5, 4), Err(Error::Range(_))));
        assert!(matches!(run_survey(0, 4), Err(Error::Range(_))));
    }

    #[test]
    fn default_box_respects_budget() {
        assert_eq!(default_box(16, 4), 3);
        assert_eq!(default_box(32, 8), 1);
        assert_eq!(default_box(2, 2), 3);
    }

    #[test]
    fn triples() {
        let k = NumberField::quadratic(-1).unwrap();
        let [a, b, c] = parse_triple(&k, "1;1, 2, -3").unwrap();
        assert_eq!(a, k.element_from_ints(&[1, 1]));
        assert_eq!(b, k.from_int(2));
        assert_eq!(c, k.from_int(-3));
        assert!(parse_triple(&k, "1,2").is_err());
    }
}
