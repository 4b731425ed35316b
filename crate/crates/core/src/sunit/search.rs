use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::nf::{FieldElement, NumberField};

use super::{compute_st, lambda_orbit_values, sunit_describe, STSets, SUnitGroupDesc, SUnitSolution, SUnitTest};

/// Solutions of `λ + μ = 1` sorted by the coordinates of `λ`, and whether the
/// list is known to be the complete solution set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub solutions: Vec<SUnitSolution>,
    pub complete: bool,
}

/// Enumerate `λ = τ^j · Π g_i^{e_i}` over the torsion generator `τ` and
/// the free generators `g_i` with `|e_i| <= bound`, keep those with `1 − λ`
/// an S-unit, and close the result under the six-element λ-orbit
/// `λ ↦ 1/λ, 1−λ, …` (which maps solutions to solutions). Solutions are
/// deduplicated by the coordinates of `λ` and returned in that order.
///
/// The exponent box is split across rayon workers; the merge sorts, so the
/// output does not depend on scheduling. The result is never flagged
/// complete; only [`solve_iq_ramified`] makes that claim.
pub fn bounded_search(
    k: &NumberField,
    st: &STSets,
    desc: &SUnitGroupDesc,
    bound: u32,
) -> Result<SearchResult> {
    if bound == 0 {
        return Err(Error::PreconditionViolation("search box must be at least 1".into()));
    }
    let test = SUnitTest::new(k, st.s())?;
    let lambdas = enumerate(k, &test, desc, bound)?;
    let mut closed = BTreeSet::new();
    for l in &lambdas {
        closed.extend(lambda_orbit_values(k, l)?);
    }
    let solutions = closed
        .into_par_iter()
        .map(|l| SUnitSolution::from_lambda_with(k, st, &test, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchResult {
        solutions,
        complete: false,
    })
}

/// `num / den` with integer coordinates; products are formed without
/// normalising, which keeps the inner loop free of gcd computations.
#[derive(Clone)]
struct Fraction {
    num: Vec<BigInt>,
    den: BigInt,
}

impl Fraction {
    fn from_element(x: &FieldElement) -> Self {
        let (den, num) = x.clear_denominators();
        Fraction { num, den }
    }

    fn mul(&self, k: &NumberField, other: &Fraction) -> Fraction {
        Fraction {
            num: k.mul_int(&self.num, &other.num),
            den: &self.den * &other.den,
        }
    }

    /// Lowest-terms form: the common denominator becomes minimal and positive.
    fn normalized(mut self) -> Fraction {
        let g = self.num.iter().fold(self.den.clone(), |g, c| g.gcd(c));
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
        self
    }

    fn to_element(&self, k: &NumberField) -> FieldElement {
        k.element(
            self.num
                .iter()
                .map(|c| BigRational::new(c.clone(), self.den.clone()))
                .collect(),
        )
        .expect("coordinate count matches the degree")
    }
}

fn power_table(k: &NumberField, g: &FieldElement, bound: u32) -> Result<Vec<Fraction>> {
    let b = bound as i64;
    (-b..=b).map(|e| Ok(Fraction::from_element(&k.pow(g, e)?))).collect()
}

/// All `λ` in the exponent box with `λ ∉ {0, 1}` and `1 − λ` an S-unit.
fn enumerate(
    k: &NumberField,
    test: &SUnitTest,
    desc: &SUnitGroupDesc,
    bound: u32,
) -> Result<BTreeSet<FieldElement>> {
    let mut torsion = Vec::with_capacity(desc.torsion_order() as usize);
    let mut cur = k.one();
    for _ in 0..desc.torsion_order() {
        torsion.push(Fraction::from_element(&cur));
        cur = k.mul(&cur, desc.torsion());
    }
    let tables = desc
        .generators()
        .iter()
        .map(|g| power_table(k, g, bound))
        .collect::<Result<Vec<_>>>()?;
    let width = 2 * bound as usize + 1;
    let too_large = || Error::PreconditionViolation("exponent box too large to enumerate".into());
    let free_count = width.checked_pow(tables.len() as u32).ok_or_else(too_large)?;
    let total = free_count.checked_mul(torsion.len()).ok_or_else(too_large)?;
    let hits = (0..total)
        .into_par_iter()
        .map(|idx| -> Result<Option<FieldElement>> {
            let mut rest = idx % free_count;
            let mut lambda = torsion[idx / free_count].clone();
            for table in tables.iter().rev() {
                lambda = lambda.mul(k, &table[rest % width]);
                rest /= width;
            }
            let lambda = lambda.normalized();
            // 1 - num/den = (den - num)/den, already in lowest terms
            let mut mu = lambda.num.iter().map(|c| -c).collect::<Vec<_>>();
            mu[0] += &lambda.den;
            if mu.iter().all(Zero::is_zero) {
                return Ok(None);
            }
            let mu = Fraction {
                num: mu,
                den: lambda.den.clone(),
            };
            if !test.contains_integral(k, &mu.den, &mu.num, || mu.to_element(k))? {
                return Ok(None);
            }
            Ok(Some(lambda.to_element(k)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(hits.into_iter().flatten().collect())
}

/// The complete solution set for `Q(sqrt(-d))` with `-d ≡ 2, 3 (mod 4)`.
///
/// Here S is a single ramified prime `P` with `P^2 = (2)`, so every S-unit
/// is `u·π^r` with `u` a root of unity and `π` the generator of the
/// smallest principal power of `P`: `π = 2` for `d > 2`, `1 + i` for
/// `d = 1` and `sqrt(-2)` for `d = 2`. For a solution put
/// `t = max(|ord_P λ|, |ord_P μ|)`. Since `ord_P(λ + μ) = 0` the
/// ultrametric inequality leaves three valuation patterns:
///
/// * `(0, t)`: `λ` is a root of unity and `μ = 1 − λ` has `|μ| <= 2`;
/// * `(t, 0)`: symmetric;
/// * `(−t, −t)`: `|λ| = |μ| = 2^{−t/2}` (the only archimedean absolute
///   value is `|x|^2 = N(x)`), and `1 <= |λ| + |μ|` forces `t <= 2`.
///
/// In the first two cases `N(μ) = 2^t <= 4` gives `t <= 2` as well, so every
/// solution has `π`-exponent at most `2 / ord_P(π)` in absolute value. The
/// enumeration below uses box 2 for `d > 2` (where `ord_P(π) = 2`, so only
/// `|r| <= 1` is needed) and box 4 for `d = 1, 2`, both comfortably above
/// the bound.
pub fn solve_iq_ramified(k: &NumberField) -> Result<SearchResult> {
    let m = k.parameter();
    if !k.is_imaginary_quadratic() || !matches!(m.rem_euclid(4), 2 | 3) {
        return Err(Error::WrongFamily(format!(
            "{} is not imaginary quadratic with 2 ramified and -d ≡ 2, 3 (mod 4)",
            k.name()
        )));
    }
    let st = compute_st(k);
    let desc = sunit_describe(k, &st)?;
    let bound = if m >= -2 { 4 } else { 2 };
    let mut result = bounded_search(k, &st, &desc, bound)?;
    result.complete = true;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lambdas(k: &NumberField, r: &SearchResult) -> Vec<String> {
        r.solutions.iter().map(|s| k.fmt_element(s.lambda())).collect()
    }

    #[test]
    fn minus_five_exact() {
        let k = NumberField::quadratic(-5).unwrap();
        let r = solve_iq_ramified(&k).unwrap();
        assert!(r.complete);
        assert_eq!(lambdas(&k, &r), ["-1", "1/2", "2"]);
        for s in &r.solutions {
            assert_eq!(s.t_values(), &[2]);
        }
    }

    #[test]
    fn gaussian_includes_non_rational_solutions() {
        let k = NumberField::quadratic(-1).unwrap();
        let r = solve_iq_ramified(&k).unwrap();
        let got: BTreeSet<FieldElement> = r.solutions.iter().map(|s| s.lambda().clone()).collect();
        for l in ["2", "-1", "1/2", "0;1", "1/2;1/2", "1/2;-1/2", "1;-1", "1;1", "0;-1"] {
            assert!(got.contains(&k.parse_element(l).unwrap()), "missing {l}");
        }
    }

    #[test]
    fn wrong_family() {
        for m in [-3, -7, -15, 5] {
            let k = NumberField::quadratic(m).unwrap();
            assert!(matches!(solve_iq_ramified(&k), Err(Error::WrongFamily(_))));
        }
        let z = NumberField::cyclotomic2(3).unwrap();
        assert!(matches!(solve_iq_ramified(&z), Err(Error::WrongFamily(_))));
    }

    #[test]
    fn search_examples() {
        let k = NumberField::quadratic(-5).unwrap();
        let st = compute_st(&k);
        let desc = sunit_describe(&k, &st).unwrap();
        let r = bounded_search(&k, &st, &desc, 3).unwrap();
        assert!(!r.complete);
        assert_eq!(r.solutions, solve_iq_ramified(&k).unwrap().solutions);

        // torsion only: lambda = -1 still gives mu = 2, and the orbit closure
        // recovers the other two solutions
        let r = bounded_search(&k, &st, &desc.torsion_only(), 1).unwrap();
        assert_eq!(lambdas(&k, &r), ["-1", "1/2", "2"]);
        let r = bounded_search(&k, &st, &SUnitGroupDesc::new(k.one(), 1, vec![], desc.completeness()), 1)
            .unwrap();
        assert!(r.solutions.is_empty());

        assert!(bounded_search(&k, &st, &desc, 0).is_err());
    }

    #[test]
    fn cyclotomic_sixteen_box_two() {
        let k = NumberField::cyclotomic2(4).unwrap();
        let st = compute_st(&k);
        let desc = sunit_describe(&k, &st).unwrap();
        let r = bounded_search(&k, &st, &desc, 2).unwrap();
        let zeta = k.theta();
        assert!(r.solutions.iter().any(|s| s.lambda() == &zeta));
        assert!(r.solutions.iter().any(|s| s.mu() == &zeta));
    }
}
