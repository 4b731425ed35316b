//! S-units for S the set of primes above 2: the sets S and T, a description
//! of the S-unit group, membership tests, and solution sets of `λ + μ = 1`.

mod group;
mod list;
mod search;
mod solution;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

pub use group::{fundamental_unit, sunit_describe, Completeness, SUnitGroupDesc};
pub use list::{parse_solution_list, verify_solution_list, EntryReport, ListEntry, ListReport};
pub use search::{bounded_search, solve_iq_ramified, SearchResult};
pub use solution::{lambda_orbit_values, PrimeValuation, SUnitSolution};

use crate::arith::int;
use crate::error::{Error, Result};
use crate::nf::{factor_prime, factor_two, ord_at, FieldElement, FieldKind, NumberField, PrimeIdeal};

/// The primes above 2 (`S`) and those among them with residue field `F_2` (`T`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct STSets {
    s: Vec<PrimeIdeal>,
    t: Vec<usize>,
}

impl STSets {
    pub fn s(&self) -> &[PrimeIdeal] {
        &self.s
    }

    pub fn t(&self) -> impl Iterator<Item = &PrimeIdeal> + '_ {
        self.t.iter().map(move |&i| &self.s[i])
    }

    /// Positions of the members of `T` inside `S`.
    pub fn t_indices(&self) -> &[usize] {
        &self.t
    }

    pub fn t_is_empty(&self) -> bool {
        self.t.is_empty()
    }
}

pub fn compute_st(k: &NumberField) -> STSets {
    let s = factor_two(k);
    let t = (0..s.len()).filter(|&i| s[i].residue_degree() == 1).collect();
    STSets { s, t }
}

/// `[O_K : Z[theta]]` is 2 for `Q(sqrt(m))`, `m ≡ 1 (mod 4)`, and 1 otherwise.
fn index_is_two(k: &NumberField) -> bool {
    k.kind() == FieldKind::Quadratic && k.parameter().rem_euclid(4) == 1
}

/// Membership test for `O_S^×`, precomputed for a fixed S.
///
/// Write `x = alpha / D` with `alpha` in `Z[theta]` and `D` the least common
/// denominator. For a rational prime `ell` not dividing `[O_K : Z[theta]]`
/// and with no prime of S above it, `x` is a unit at every prime above
/// `ell` iff `ell` divides neither `D` nor `N(alpha)`. Primes `ell` that are
/// only partly covered by S, and 2 when it divides the index, are settled by
/// explicit valuations; everything else is decided by stripping the covered
/// primes from `D * N(alpha)` and testing for a trivial remainder, so no
/// integer factorisation is needed.
#[derive(Clone, Debug)]
pub struct SUnitTest {
    s: Vec<PrimeIdeal>,
    full: Vec<u64>,
    explicit: Vec<(u64, Vec<PrimeIdeal>)>,
    /// Residues of `±2^j` modulo [`FILTER_PRIME`] when 2 is the only prime
    /// allowed in `D * N(alpha)`; lets most non-members be rejected
    /// without computing the exact norm.
    filter: Option<Vec<u64>>,
}

/// `2^61 − 1`; since `2^61 ≡ 1` the powers of 2 modulo it form a cycle of 61.
const FILTER_PRIME: u64 = (1 << 61) - 1;

impl SUnitTest {
    pub fn new(k: &NumberField, s: &[PrimeIdeal]) -> Result<Self> {
        let chars: BTreeSet<u64> = s.iter().map(|p| p.residue_characteristic()).collect();
        let mut full = Vec::new();
        let mut explicit = Vec::new();
        for &ell in &chars {
            let above = factor_prime(k, ell)?;
            if above.iter().all(|q| s.contains(q)) {
                full.push(ell);
            } else {
                explicit.push((ell, above));
            }
        }
        if index_is_two(k) && !chars.contains(&2) {
            explicit.push((2, factor_two(k)));
        }
        let two_only = full.iter().chain(explicit.iter().map(|(ell, _)| ell)).all(|&l| l == 2);
        let filter = two_only.then(|| {
            let mut residues: Vec<u64> = (0..61)
                .flat_map(|j| {
                    let r = 1u64 << j;
                    [r, FILTER_PRIME - r]
                })
                .collect();
            residues.sort_unstable();
            residues
        });
        Ok(SUnitTest {
            s: s.to_vec(),
            full,
            explicit,
            filter,
        })
    }

    pub fn contains(&self, k: &NumberField, x: &FieldElement) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::ValuationOfZero);
        }
        let (d, alpha) = x.clear_denominators();
        self.contains_integral(k, &d, &alpha, || x.clone())
    }

    /// Membership of `x = alpha / d`, where `d` is the least common
    /// denominator of `x`.
    pub(crate) fn contains_integral(
        &self,
        k: &NumberField,
        d: &BigInt,
        alpha: &[BigInt],
        element: impl FnOnce() -> FieldElement,
    ) -> Result<bool> {
        if let Some(residues) = &self.filter {
            let modulus = BigInt::from(FILTER_PRIME);
            let dm: u64 = d.mod_floor(&modulus).try_into().expect("reduced");
            let nm = k.norm_int_mod(alpha, FILTER_PRIME);
            let r = ((dm as u128 * nm as u128) % FILTER_PRIME as u128) as u64;
            if residues.binary_search(&r).is_err() {
                return Ok(false);
            }
        }
        let mut rest = d * k.norm_int(alpha);
        for ell in self.full.iter().chain(self.explicit.iter().map(|(ell, _)| ell)) {
            rest = int::strip(&rest, *ell);
        }
        if !rest.magnitude().is_one() {
            return Ok(false);
        }
        if self.explicit.is_empty() {
            return Ok(true);
        }
        let x = element();
        for (_, above) in &self.explicit {
            for q in above.iter().filter(|q| !self.s.contains(q)) {
                if ord_at(k, q, &x)? != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Whether `ord_q(x) = 0` for every prime `q` outside `s`.
pub fn is_s_unit(k: &NumberField, x: &FieldElement, s: &[PrimeIdeal]) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    SUnitTest::new(k, s)?.contains(k, x)
}
