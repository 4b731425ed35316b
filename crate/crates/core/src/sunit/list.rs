//! Externally supplied solution lists: one `λ` per line as power-basis
//! coordinates `c0;c1;...;c(n-1)`, `μ = 1 − λ` implied, `#` starts a comment
//! line.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::nf::{FieldElement, NumberField};

use super::{STSets, SUnitSolution, SUnitTest};

/// One non-comment line of a solution list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListEntry {
    pub line: usize,
    pub text: String,
    pub lambda: std::result::Result<FieldElement, Error>,
}

pub fn parse_solution_list(k: &NumberField, text: &str) -> Vec<ListEntry> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                return None;
            }
            let lambda = k.parse_element(line).map_err(|msg| Error::parse(i + 1, msg));
            Some(ListEntry {
                line: i + 1,
                text: line.to_string(),
                lambda,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryReport {
    Valid { line: usize, solution: SUnitSolution },
    Invalid { line: usize, text: String, reason: Error },
}

impl EntryReport {
    pub fn line(&self) -> usize {
        match self {
            EntryReport::Valid { line, .. } | EntryReport::Invalid { line, .. } => *line,
        }
    }

    pub fn solution(&self) -> Option<&SUnitSolution> {
        match self {
            EntryReport::Valid { solution, .. } => Some(solution),
            EntryReport::Invalid { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListReport {
    pub entries: Vec<EntryReport>,
    /// Largest `max(|ord_P λ|, |ord_P μ|)` over valid entries and all P in S.
    pub max_valuation: u64,
}

impl ListReport {
    pub fn valid(&self) -> impl Iterator<Item = &SUnitSolution> {
        self.entries.iter().filter_map(EntryReport::solution)
    }

    pub fn invalid_count(&self) -> usize {
        self.entries.iter().filter(|e| e.solution().is_none()).count()
    }
}

/// Check every entry independently: `λ + μ = 1` by construction, both
/// components S-units, valuations at every prime of S.
pub fn verify_solution_list(k: &NumberField, st: &STSets, entries: &[ListEntry]) -> Result<ListReport> {
    let test = SUnitTest::new(k, st.s())?;
    let reports: Vec<EntryReport> = entries
        .par_iter()
        .map(|e| {
            let checked = e
                .lambda
                .clone()
                .and_then(|l| SUnitSolution::from_lambda_with(k, st, &test, l));
            match checked {
                Ok(solution) => EntryReport::Valid {
                    line: e.line,
                    solution,
                },
                Err(reason) => EntryReport::Invalid {
                    line: e.line,
                    text: e.text.clone(),
                    reason,
                },
            }
        })
        .collect();
    let max_valuation = reports
        .iter()
        .filter_map(EntryReport::solution)
        .map(SUnitSolution::max_valuation)
        .max()
        .unwrap_or(0);
    Ok(ListReport {
        entries: reports,
        max_valuation,
    })
}
