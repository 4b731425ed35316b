use serde::Serialize;

use crate::arith::int;
use crate::criterion::bound_at;
use crate::error::Result;
use crate::frey::{conductor_exponent_bound, frey_invariants, inertia_classify, InertiaClassification, OrdJ};
use crate::nf::{ord_at, FieldElement, NumberField};
use crate::sunit::compute_st;

use super::{splitting_of_two, Splitting};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeAboveTwo {
    pub ideal: String,
    pub e: u32,
    pub f: u32,
    pub in_t: bool,
    /// `4 ord_P(2)` when P is in T.
    pub bound: Option<u64>,
    pub conductor_bound: u64,
}

/// How 2 decomposes in a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Split2Report {
    pub field: String,
    pub splitting: Splitting,
    pub primes: Vec<PrimeAboveTwo>,
}

pub fn split2_report(k: &NumberField) -> Split2Report {
    let st = compute_st(k);
    let primes = st
        .s()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let in_t = st.t_indices().contains(&i);
            PrimeAboveTwo {
                ideal: p.describe(k),
                e: p.ramification_index(),
                f: p.residue_degree(),
                in_t,
                bound: in_t.then(|| bound_at(p)),
                conductor_bound: conductor_exponent_bound(p),
            }
        })
        .collect();
    Split2Report {
        field: k.name(),
        splitting: splitting_of_two(&st),
        primes,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreyPrime {
    pub ideal: String,
    pub ord_a: i64,
    pub ord_b: i64,
    pub ord_c: i64,
    /// `None` when `j = 0`.
    pub ord_j: Option<i64>,
    /// `8 ord_P(2) − 2p ord_P(b)`, when P has residue field `F_2` and
    /// divides `b` but not `ac`.
    pub closed_form: Option<i64>,
    /// Image of inertia, for prime exponents `p >= 5`.
    pub inertia: Option<InertiaClassification>,
    pub conductor_bound: u64,
}

/// Frey curve invariants of a triple together with local data above 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreyReport {
    pub field: String,
    pub a: String,
    pub b: String,
    pub c: String,
    pub p: u32,
    /// Whether `a^p + b^p + c^p = 0`.
    pub fermat: bool,
    pub c4: String,
    pub delta: String,
    pub j: String,
    pub primes: Vec<FreyPrime>,
}

pub fn frey_report(k: &NumberField, triple: &[FieldElement; 3], p: u32) -> Result<FreyReport> {
    let [a, b, c] = triple;
    let curve = frey_invariants(k, a, b, c, p)?;
    let e = p as i64;
    let sum = &(&k.pow(a, e)? + &k.pow(b, e)?) + &k.pow(c, e)?;
    let st = compute_st(k);
    let mut primes = Vec::new();
    for q in st.s() {
        let (va, vb, vc) = (ord_at(k, q, a)?, ord_at(k, q, b)?, ord_at(k, q, c)?);
        let ord_j = if curve.j.is_zero() { None } else { Some(ord_at(k, q, &curve.j)?) };
        let closed_form = (q.residue_degree() == 1 && va == 0 && vc == 0 && vb > 0)
            .then(|| 8 * q.ramification_index() as i64 - 2 * e * vb);
        let inertia = if p >= 5 && int::is_prime(p as u64) {
            let ord = ord_j.map_or(OrdJ::NonNegative, OrdJ::Value);
            Some(inertia_classify(ord, p as u64)?)
        } else {
            None
        };
        primes.push(FreyPrime {
            ideal: q.describe(k),
            ord_a: va,
            ord_b: vb,
            ord_c: vc,
            ord_j,
            closed_form,
            inertia,
            conductor_bound: conductor_exponent_bound(q),
        });
    }
    Ok(FreyReport {
        field: k.name(),
        a: k.fmt_element(a),
        b: k.fmt_element(b),
        c: k.fmt_element(c),
        p,
        fermat: sum.is_zero(),
        c4: k.fmt_element(&curve.c4),
        delta: k.fmt_element(&curve.delta),
        j: k.fmt_element(&curve.j),
        primes,
    })
}
