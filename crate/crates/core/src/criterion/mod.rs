//! The valuation criterion at the primes of T and the `j′` arithmetic behind
//! it.
//!
//! A field satisfies the criterion when every solution `(λ, μ)` of the
//! S-unit equation has some prime `P` of T with
//! `max(|ord_P λ|, |ord_P μ|) <= 4 ord_P(2)`. A verdict of `FAILS` only says
//! that this hypothesis is violated by the supplied solutions.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::nf::{ord_at, FieldElement, NumberField};
use crate::sunit::{STSets, SUnitSolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::NotApplicable => "NOT_APPLICABLE",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

/// Outcome of the criterion for one solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionCheck {
    pub solution: SUnitSolution,
    /// Index into S of the first prime of T meeting the bound.
    pub witness: Option<usize>,
}

impl SolutionCheck {
    pub fn passes(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldVerdict {
    pub field: String,
    pub verdict: Verdict,
    pub complete: bool,
    /// `4 ord_P(2)` for every prime of T, in T order.
    pub bounds: Vec<u64>,
    /// Per-solution checks sorted by the coordinates of `λ`.
    pub checks: Vec<SolutionCheck>,
    /// Index into `checks` of the first failing solution.
    pub failing: Option<usize>,
}

/// `4 ord_P(2) = 4 e(P|2)`.
pub fn bound_at(p: &crate::nf::PrimeIdeal) -> u64 {
    4 * p.ramification_index() as u64
}

/// Evaluate the criterion on a validated solution list.
///
/// Precedence of verdicts: `NOT_APPLICABLE` when T is empty, then `UNKNOWN`
/// when the list is not known to be complete (a failing solution is still
/// recorded in `failing`), then `FAILS` if some solution has no prime of T
/// within the bound, else `HOLDS`.
pub fn criterion_check(k: &NumberField, st: &STSets, solutions: &[SUnitSolution], complete: bool) -> FieldVerdict {
    let t_primes: Vec<usize> = st.t_indices().to_vec();
    let bounds: Vec<u64> = st.t().map(bound_at).collect();
    let mut checks: Vec<SolutionCheck> = solutions
        .iter()
        .map(|s| {
            let witness = t_primes
                .iter()
                .zip(&bounds)
                .find(|&(&i, &b)| s.valuations()[i].t() <= b)
                .map(|(&i, _)| i);
            SolutionCheck {
                solution: s.clone(),
                witness,
            }
        })
        .collect();
    checks.sort_by(|a, b| a.solution.lambda().cmp(b.solution.lambda()));
    checks.dedup_by(|a, b| a.solution.lambda() == b.solution.lambda());
    let failing = checks.iter().position(|c| !c.passes());
    let verdict = if t_primes.is_empty() {
        Verdict::NotApplicable
    } else if !complete {
        Verdict::Unknown
    } else if failing.is_some() {
        Verdict::Fails
    } else {
        Verdict::Holds
    };
    FieldVerdict {
        field: k.name(),
        verdict,
        complete,
        bounds,
        checks,
        failing,
    }
}

/// `j′ = 2^8 (1 − λμ)^3 / (λμ)^2`.
pub fn jprime(k: &NumberField, lambda: &FieldElement, mu: &FieldElement) -> Result<FieldElement> {
    if lambda.is_zero() || lambda.is_one() {
        return Err(Error::DegenerateLambda(format!(
            "lambda = {} is 0 or 1",
            k.fmt_element(lambda)
        )));
    }
    if !(lambda + mu).is_one() {
        return Err(Error::PreconditionViolation(format!(
            "{} + {} is not 1",
            k.fmt_element(lambda),
            k.fmt_element(mu)
        )));
    }
    let prod = k.mul(lambda, mu);
    let one_minus = &k.one() - &prod;
    let num = k.mul(&k.pow(&one_minus, 3)?, &k.from_int(256));
    k.div(&num, &k.mul(&prod, &prod))
}

/// Which of the three ultrametric patterns `(ord_P λ, ord_P μ)` occurs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ValuationPattern {
    /// `(−t, −t)` with `t > 0`.
    BothNegative,
    /// `(0, t)` with `t > 0`.
    LambdaUnit,
    /// `(t, 0)` with `t > 0`.
    MuUnit,
    /// `(0, 0)`: both are units at P, only possible when `f(P) > 1`.
    BothUnits,
}

impl fmt::Display for ValuationPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ValuationPattern::BothNegative => "(-t,-t)",
            ValuationPattern::LambdaUnit => "(0,t)",
            ValuationPattern::MuUnit => "(t,0)",
            ValuationPattern::BothUnits => "(0,0)",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CaseAnalysis {
    pub t: u64,
    pub pattern: ValuationPattern,
    /// `ord_P(j′)` computed from `j′` itself.
    pub ord_jprime: i64,
    /// `8 ord_P(2) − 2t`.
    pub closed_form: i64,
}

impl CaseAnalysis {
    /// For `t = 0` only `ord_P(j′) >= 8 ord_P(2) > 0` is claimed.
    pub fn is_degenerate(&self) -> bool {
        self.pattern == ValuationPattern::BothUnits
    }

    pub fn identity_holds(&self) -> bool {
        if self.is_degenerate() {
            self.ord_jprime >= self.closed_form
        } else {
            self.ord_jprime == self.closed_form
        }
    }
}

/// Case split at the prime `st.s()[index]` and both evaluations of `ord_P(j′)`.
pub fn case_analysis(k: &NumberField, st: &STSets, solution: &SUnitSolution, index: usize) -> Result<CaseAnalysis> {
    let p = st
        .s()
        .get(index)
        .ok_or_else(|| Error::PreconditionViolation(format!("no prime with index {index} in S")))?;
    let v = solution.valuations()[index];
    let t = v.t();
    let ti = t as i64;
    let pattern = match (v.lambda, v.mu) {
        (0, 0) => ValuationPattern::BothUnits,
        (a, b) if a == -ti && b == -ti => ValuationPattern::BothNegative,
        (0, b) if b == ti => ValuationPattern::LambdaUnit,
        (a, 0) if a == ti => ValuationPattern::MuUnit,
        (a, b) => {
            return Err(Error::PreconditionViolation(format!(
                "valuations ({a}, {b}) violate the ultrametric inequality"
            )))
        }
    };
    let j = jprime(k, solution.lambda(), solution.mu())?;
    let ord_jprime = ord_at(k, p, &j)?;
    let closed_form = 8 * p.ramification_index() as i64 - 2 * ti;
    Ok(CaseAnalysis {
        t,
        pattern,
        ord_jprime,
        closed_form,
    })
}
