use crate::error::{Error, Result};
use crate::nf::{ord_at, FieldElement, NumberField};

use super::{STSets, SUnitTest};

/// `(ord_P(λ), ord_P(μ))` at one prime of S.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeValuation {
    pub lambda: i64,
    pub mu: i64,
}

impl PrimeValuation {
    /// `max(|ord_P λ|, |ord_P μ|)`.
    pub fn t(&self) -> u64 {
        self.lambda.unsigned_abs().max(self.mu.unsigned_abs())
    }
}

/// A solution of `λ + μ = 1` in S-units together with its valuations at
/// every prime of S (in S order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SUnitSolution {
    lambda: FieldElement,
    mu: FieldElement,
    valuations: Vec<PrimeValuation>,
    t_values: Vec<u64>,
}

impl SUnitSolution {
    /// Validate `λ` (with `μ = 1 − λ`) and tabulate valuations.
    pub fn from_lambda(k: &NumberField, st: &STSets, lambda: FieldElement) -> Result<Self> {
        Self::from_lambda_with(k, st, &SUnitTest::new(k, st.s())?, lambda)
    }

    /// [`from_lambda`](Self::from_lambda) with a prepared membership test for S.
    pub fn from_lambda_with(
        k: &NumberField,
        st: &STSets,
        test: &SUnitTest,
        lambda: FieldElement,
    ) -> Result<Self> {
        let mu = &k.one() - &lambda;
        if lambda.is_zero() || mu.is_zero() {
            return Err(Error::DegenerateLambda(format!(
                "lambda = {} gives a zero component",
                k.fmt_element(&lambda)
            )));
        }
        for (name, x) in [("lambda", &lambda), ("mu", &mu)] {
            if !test.contains(k, x)? {
                return Err(Error::PreconditionViolation(format!(
                    "{name} = {} is not an S-unit",
                    k.fmt_element(x)
                )));
            }
        }
        let valuations = st
            .s()
            .iter()
            .map(|p| {
                Ok(PrimeValuation {
                    lambda: ord_at(k, p, &lambda)?,
                    mu: ord_at(k, p, &mu)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let t_values = st.t_indices().iter().map(|&i| valuations[i].t()).collect();
        Ok(SUnitSolution {
            lambda,
            mu,
            valuations,
            t_values,
        })
    }

    /// Assemble a solution record from given valuations without any checks.
    /// Meant for feeding hand-made (possibly impossible) inputs to the
    /// criterion.
    pub fn from_parts_unchecked(
        st: &STSets,
        lambda: FieldElement,
        mu: FieldElement,
        valuations: Vec<PrimeValuation>,
    ) -> Self {
        let t_values = st.t_indices().iter().map(|&i| valuations[i].t()).collect();
        SUnitSolution {
            lambda,
            mu,
            valuations,
            t_values,
        }
    }

    pub fn lambda(&self) -> &FieldElement {
        &self.lambda
    }

    pub fn mu(&self) -> &FieldElement {
        &self.mu
    }

    /// Valuations at the primes of S, in S order.
    pub fn valuations(&self) -> &[PrimeValuation] {
        &self.valuations
    }

    /// `t_P` for the primes of T, in T order.
    pub fn t_values(&self) -> &[u64] {
        &self.t_values
    }

    /// Largest `max(|ord_P λ|, |ord_P μ|)` over all of S.
    pub fn max_valuation(&self) -> u64 {
        self.valuations.iter().map(PrimeValuation::t).max().unwrap_or(0)
    }

    /// The solution `(μ, λ)`.
    pub fn swapped(&self) -> Self {
        SUnitSolution {
            lambda: self.mu.clone(),
            mu: self.lambda.clone(),
            valuations: self
                .valuations
                .iter()
                .map(|v| PrimeValuation {
                    lambda: v.mu,
                    mu: v.lambda,
                })
                .collect(),
            t_values: self.t_values.clone(),
        }
    }
}

/// The six values `λ, 1/λ, 1−λ, 1/(1−λ), λ/(λ−1), (λ−1)/λ`.
pub fn lambda_orbit_values(k: &NumberField, lambda: &FieldElement) -> Result<[FieldElement; 6]> {
    let one = k.one();
    let mu = &one - lambda;
    if lambda.is_zero() || mu.is_zero() {
        return Err(Error::DegenerateLambda(format!(
            "lambda = {} is 0 or 1",
            k.fmt_element(lambda)
        )));
    }
    let inv = k.inv(lambda)?;
    let inv_mu = k.inv(&mu)?;
    let neg_mu = -&mu;
    Ok([
        lambda.clone(),
        inv.clone(),
        mu.clone(),
        inv_mu.clone(),
        k.mul(lambda, &k.inv(&neg_mu)?),
        k.mul(&neg_mu, &inv),
    ])
}
