//! Frey curves `Y^2 = X(X − a^p)(X + b^p)` attached to `a^p + b^p + c^p = 0`:
//! invariants, the valuation of `j` at primes of T, inertia classification
//! from `ord_q(j)`, conductor exponent bounds, the λ-orbit, and scaling a
//! triple so that its gcd ideal is a fixed class representative.

mod weierstrass;

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

pub use weierstrass::WeierstrassModel;

use crate::arith::int;
use crate::class::{self, IdealIQ};
use crate::error::{Error, Result};
use crate::nf::{ord_at, FieldElement, NumberField, PrimeIdeal};
use crate::sunit::lambda_orbit_values;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreyCurve {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub p: u32,
    pub c4: FieldElement,
    pub delta: FieldElement,
    pub j: FieldElement,
}

impl FreyCurve {
    /// The model `Y^2 = X(X − a^p)(X + b^p)` as a general Weierstrass equation.
    pub fn model(&self, k: &NumberField) -> Result<WeierstrassModel> {
        let ap = k.pow(&self.a, self.p as i64)?;
        let bp = k.pow(&self.b, self.p as i64)?;
        Ok(WeierstrassModel::two_torsion(k, &ap, &bp))
    }
}

fn check_triple(k: &NumberField, a: &FieldElement, b: &FieldElement, c: &FieldElement) -> Result<()> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::TrivialSolution);
    }
    for x in [a, b, c] {
        if !k.is_integral(x) {
            return Err(Error::PreconditionViolation(format!(
                "{} is not integral",
                k.fmt_element(x)
            )));
        }
    }
    Ok(())
}

/// `c4 = 2^4 (b^{2p} − a^p c^p)`, `Δ = 2^4 (abc)^{2p}`, `j = c4^3 / Δ`.
pub fn frey_invariants(
    k: &NumberField,
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
    p: u32,
) -> Result<FreyCurve> {
    check_triple(k, a, b, c)?;
    if p == 0 {
        return Err(Error::PreconditionViolation("exponent must be positive".into()));
    }
    let e = p as i64;
    let ap = k.pow(a, e)?;
    let bp = k.pow(b, e)?;
    let cp = k.pow(c, e)?;
    let sixteen = k.from_int(16);
    let inner = &k.mul(&bp, &bp) - &k.mul(&ap, &cp);
    let c4 = k.mul(&sixteen, &inner);
    let abc = k.mul(&k.mul(&ap, &bp), &cp);
    let delta = k.mul(&sixteen, &k.mul(&abc, &abc));
    let j = k.div(&k.pow(&c4, 3)?, &delta)?;
    Ok(FreyCurve {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        p,
        c4,
        delta,
        j,
    })
}

/// `ord_P(j)` of the Frey curve and the value `8 ord_P(2) − 2p ord_P(b)`,
/// for `P` above 2 with residue field `F_2`, `P | b` and `P ∤ ac`.
pub fn jval_identity(
    k: &NumberField,
    prime: &PrimeIdeal,
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
    p: u32,
) -> Result<(i64, i64)> {
    if prime.residue_characteristic() != 2 || prime.residue_degree() != 1 {
        return Err(Error::PreconditionViolation(
            "prime must lie above 2 with residue degree 1".into(),
        ));
    }
    check_triple(k, a, b, c)?;
    let (va, vb, vc) = (ord_at(k, prime, a)?, ord_at(k, prime, b)?, ord_at(k, prime, c)?);
    if vb <= 0 || va != 0 || vc != 0 {
        return Err(Error::PreconditionViolation(format!(
            "need ord(a) = ord(c) = 0 < ord(b), got ({va}, {vb}, {vc})"
        )));
    }
    let curve = frey_invariants(k, a, b, c, p)?;
    let direct = ord_at(k, prime, &curve.j)?;
    let closed = 8 * prime.ramification_index() as i64 - 2 * p as i64 * vb;
    Ok((direct, closed))
}

/// `ord_q(j)`, or only the knowledge that it is non-negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrdJ {
    Value(i64),
    NonNegative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionType {
    PotentiallyGood,
    PotentiallyMultiplicative,
}

impl fmt::Display for ReductionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionType::PotentiallyGood => "potentially-good",
            ReductionType::PotentiallyMultiplicative => "potentially-multiplicative",
        })
    }
}

/// Possible orders of the image of inertia at `q` in the mod `p`
/// representation. Valid only for `q ∤ p`, which the caller asserts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InertiaClassification {
    pub reduction: ReductionType,
    pub orders: BTreeSet<u64>,
    pub assumes_q_coprime_to_p: bool,
}

pub fn inertia_classify(ord: OrdJ, p: u64) -> Result<InertiaClassification> {
    if p < 5 || !int::is_prime(p) {
        return Err(Error::UnsupportedExponent(p));
    }
    let (reduction, orders): (ReductionType, BTreeSet<u64>) = match ord {
        OrdJ::NonNegative => (ReductionType::PotentiallyGood, divisors(24)),
        OrdJ::Value(v) if v >= 0 => (ReductionType::PotentiallyGood, divisors(24)),
        OrdJ::Value(v) if v % p as i64 != 0 => (ReductionType::PotentiallyMultiplicative, [p, 2 * p].into()),
        OrdJ::Value(_) => (ReductionType::PotentiallyMultiplicative, [1, 2].into()),
    };
    Ok(InertiaClassification {
        reduction,
        orders,
        assumes_q_coprime_to_p: true,
    })
}

fn divisors(n: u64) -> BTreeSet<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// `2 + 3 ord_q(3) + 6 ord_q(2)`.
pub fn conductor_exponent_bound(q: &PrimeIdeal) -> u64 {
    let e = q.ramification_index() as u64;
    match q.residue_characteristic() {
        2 => 2 + 6 * e,
        3 => 2 + 3 * e,
        _ => 2,
    }
}

/// `2^8 (λ^2 − λ + 1)^3 / (λ^2 (1 − λ)^2)`.
pub fn legendre_jprime(k: &NumberField, lambda: &FieldElement) -> Result<FieldElement> {
    let one = k.one();
    let mu = &one - lambda;
    if lambda.is_zero() || mu.is_zero() {
        return Err(Error::DegenerateLambda(format!(
            "lambda = {} is 0 or 1",
            k.fmt_element(lambda)
        )));
    }
    let l2 = k.mul(lambda, lambda);
    let num = &(&l2 - lambda) + &one;
    let den = k.mul(&l2, &k.mul(&mu, &mu));
    let num = k.pow(&num, 3)?.scale(&BigRational::from_integer(256.into()));
    k.div(&num, &den)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaOrbit {
    /// `λ, 1/λ, 1−λ, 1/(1−λ), λ/(λ−1), (λ−1)/λ`.
    pub values: [FieldElement; 6],
    pub jprime: FieldElement,
}

impl LambdaOrbit {
    /// The orbit as a sorted multiset.
    pub fn multiset(&self) -> Vec<FieldElement> {
        let mut v = self.values.to_vec();
        v.sort();
        v
    }
}

pub fn lambda_orbit(k: &NumberField, lambda: &FieldElement) -> Result<LambdaOrbit> {
    let values = lambda_orbit_values(k, lambda)?;
    let jprime = legendre_jprime(k, lambda)?;
    Ok(LambdaOrbit { values, jprime })
}

/// A Fermat triple rescaled so that its gcd ideal is a fixed representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedTriple {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    /// The scaling factor `ξ`.
    pub xi: FieldElement,
    /// Member of the representative set with the class of the input's gcd ideal.
    pub representative: PrimeIdeal,
}

/// Scale `(a, b, c)` by `ξ` so that `a Z_K + b Z_K + c Z_K` becomes the
/// representative `m` of its ideal class from
/// [`class::representatives_h`]. With `G` the gcd ideal of the input,
/// `m · conj(G)` is principal, generated by `γ` (canonical generator), and
/// `ξ = γ / N(G)` generates `m G^{-1}`.
pub fn normalize_solution(
    k: &NumberField,
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
) -> Result<NormalizedTriple> {
    if !k.is_imaginary_quadratic() {
        return Err(Error::UnsupportedField(format!(
            "{} is not imaginary quadratic",
            k.name()
        )));
    }
    check_triple(k, a, b, c)?;
    let g = IdealIQ::from_generators(k, &[a.clone(), b.clone(), c.clone()])?;
    let form = class::ideal_to_reduced_form(k, &g)?;
    let mut representative = None;
    for p in class::representatives_h(k)? {
        let ideal = IdealIQ::from_prime(k, &p)?;
        if class::ideal_to_reduced_form(k, &ideal)? == form {
            representative = Some((p, ideal));
            break;
        }
    }
    let (rep, m) = representative.expect("every class has a representative");
    let product = m.mul(k, &g.conjugate(k)?)?;
    let gamma = class::principal_generator(k, &product)?
        .expect("m and G lie in the same class");
    let xi = gamma.scale(&BigRational::from_integer(g.norm()).recip());
    Ok(NormalizedTriple {
        a: k.mul(&xi, a),
        b: k.mul(&xi, b),
        c: k.mul(&xi, c),
        xi,
        representative: rep,
    })
}
