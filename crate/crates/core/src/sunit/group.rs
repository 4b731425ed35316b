use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::int;
use crate::class::{self, IdealIQ};
use crate::error::{Error, Result};
use crate::nf::{ord_at, FieldElement, FieldKind, NumberField, PrimeIdeal};

use super::STSets;

/// How much of the S-unit group the generators are known to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Completeness {
    /// Torsion and free generators produce the whole group.
    Exact,
    /// The generators produce a subgroup of finite index.
    FiniteIndexSubgroup,
    /// The generators have smaller rank than the group; some S-units are
    /// out of reach of any exponent box.
    Partial,
}

impl fmt::Display for Completeness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Completeness::Exact => "exact",
            Completeness::FiniteIndexSubgroup => "finite-index-subgroup",
            Completeness::Partial => "partial",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SUnitGroupDesc {
    torsion: FieldElement,
    torsion_order: u32,
    generators: Vec<FieldElement>,
    completeness: Completeness,
}

impl SUnitGroupDesc {
    pub fn new(
        torsion: FieldElement,
        torsion_order: u32,
        generators: Vec<FieldElement>,
        completeness: Completeness,
    ) -> Self {
        SUnitGroupDesc {
            torsion,
            torsion_order,
            generators,
            completeness,
        }
    }

    pub fn torsion(&self) -> &FieldElement {
        &self.torsion
    }

    pub fn torsion_order(&self) -> u32 {
        self.torsion_order
    }

    pub fn generators(&self) -> &[FieldElement] {
        &self.generators
    }

    pub fn completeness(&self) -> Completeness {
        self.completeness
    }

    /// The same description without free generators (torsion only).
    pub fn torsion_only(&self) -> Self {
        SUnitGroupDesc {
            generators: Vec::new(),
            ..self.clone()
        }
    }

    /// Append further S-units as generators. Duplicates are dropped; the
    /// completeness flag is kept, since extra generators never shrink the
    /// generated group.
    pub fn with_extra_generators(mut self, extra: impl IntoIterator<Item = FieldElement>) -> Self {
        for g in extra {
            if !self.generators.contains(&g) {
                self.generators.push(g);
            }
        }
        self
    }
}

/// Generators of `O_S^×` for S the primes above 2.
///
/// Imaginary quadratic fields are handled exactly: each prime of S
/// contributes the canonical generator of its smallest principal power
/// (for a ramified prime, `2` when the prime is not principal), and a pair of
/// conjugate split primes contributes `2` together with the generator for
/// one of them. Real quadratic fields add the fundamental unit and find
/// prime-power generators by a provably exhaustive norm search, which is
/// abandoned (flag [`Completeness::Partial`]) when the search region becomes
/// too large. Cyclotomic fields get `1 − ζ` and the cyclotomic units
/// `(1 − ζ^a)/(1 − ζ)`, `a` odd, `1 < a < 2^{k−1}`.
pub fn sunit_describe(k: &NumberField, st: &STSets) -> Result<SUnitGroupDesc> {
    match k.kind() {
        FieldKind::Cyclotomic2 => Ok(describe_cyclotomic(k)),
        FieldKind::Quadratic if k.is_imaginary_quadratic() => describe_imaginary(k, st),
        FieldKind::Quadratic => describe_real(k, st),
    }
}

fn describe_cyclotomic(k: &NumberField) -> SUnitGroupDesc {
    let order = 2 * k.degree() as i64;
    let zeta = k.theta();
    let one_minus = &k.one() - &zeta;
    let mut gens = vec![one_minus.clone()];
    let inv = k.inv(&one_minus).expect("1 - zeta is nonzero");
    for a in (3..order / 2).step_by(2) {
        let num = &k.one() - &k.theta_pow(a);
        gens.push(k.mul(&num, &inv));
    }
    SUnitGroupDesc::new(zeta, order as u32, gens, Completeness::FiniteIndexSubgroup)
}

fn quadratic_torsion(k: &NumberField) -> (FieldElement, u32) {
    match k.parameter() {
        -1 => (k.theta(), 4),
        // (1 + sqrt(-3)) / 2
        -3 => (k.omega(), 6),
        _ => (k.from_int(-1), 2),
    }
}

fn describe_imaginary(k: &NumberField, st: &STSets) -> Result<SUnitGroupDesc> {
    let (torsion, order) = quadratic_torsion(k);
    let s = st.s();
    let mut gens = Vec::new();
    if s.len() == 2 || s[0].residue_degree() == 2 {
        gens.push(k.from_int(2));
    }
    if s[0].residue_degree() == 1 {
        let ideal = IdealIQ::from_prime(k, &s[0])?;
        let j = class::class_order(k, &ideal)?;
        let power = ideal.pow(k, j)?;
        let g = class::principal_generator(k, &power)?
            .expect("a power of the class order is principal");
        if !gens.contains(&g) {
            gens.push(g);
        }
    }
    Ok(SUnitGroupDesc::new(torsion, order, gens, Completeness::Exact))
}

/// Largest number of `y` values a single norm search may visit.
const SEARCH_LIMIT: u64 = 2_000_000;
/// Largest exponent `j` tried when looking for a principal `P^j`.
const MAX_PRIME_POWER: u32 = 64;

enum Found {
    Generator(FieldElement),
    None,
    TooLarge,
}

fn describe_real(k: &NumberField, st: &STSets) -> Result<SUnitGroupDesc> {
    let eps = fundamental_unit(k)?;
    let s = st.s();
    let mut gens = vec![eps.clone()];
    let mut completeness = Completeness::Exact;
    let inert = s[0].residue_degree() == 2;
    let split = s.len() == 2;
    if inert {
        gens.push(k.from_int(2));
    } else if split {
        gens.push(k.from_int(2));
        let mut found = false;
        for j in 1..=MAX_PRIME_POWER {
            match prime_power_generator(k, &s[0], j, &eps)? {
                Found::Generator(g) => {
                    gens.push(g);
                    found = true;
                    break;
                }
                Found::None => continue,
                Found::TooLarge => break,
            }
        }
        if !found {
            completeness = Completeness::Partial;
        }
    } else {
        match prime_power_generator(k, &s[0], 1, &eps)? {
            Found::Generator(g) => gens.push(g),
            Found::None => gens.push(k.from_int(2)),
            Found::TooLarge => {
                gens.push(k.from_int(2));
                completeness = Completeness::FiniteIndexSubgroup;
            }
        }
    }
    Ok(SUnitGroupDesc::new(k.from_int(-1), 2, gens, completeness))
}

/// A generator `γ` of `P^j` in a real quadratic field, if `P^j` is principal.
///
/// Multiplying by powers of the fundamental unit `ε` moves `|γ/γ'|` into
/// `[1/ε, ε]`, so some generator has `|γ|, |γ'| <= sqrt(2^j ε)` and therefore
/// `|γ − γ'| <= 2 sqrt(2^j ε)`. Writing `γ = (x + y sqrt m)/2` this bounds
/// `y^2 <= 4 · 2^j · ε / m`, and scanning all such `y` is exhaustive. Among
/// the generators found, the one with smallest `|y|` and then largest
/// coordinates is returned.
fn prime_power_generator(
    k: &NumberField,
    p: &PrimeIdeal,
    j: u32,
    eps: &FieldElement,
) -> Result<Found> {
    let m = BigInt::from(k.parameter());
    let half = k.parameter().rem_euclid(4) == 1;
    // eps = c0 + c1 sqrt(m) with c0, c1 > 0 and |eps'| < 1, so eps < 2 c0 + 1
    let eps_bound = (&eps.coords()[0] * BigInt::from(2)).ceil().to_integer() + 1;
    let two_j = BigInt::one() << j;
    let y_max = int::isqrt(&(&two_j * 4u32 * &eps_bound / &m)) + 1u32;
    if y_max > BigInt::from(SEARCH_LIMIT) {
        return Ok(Found::TooLarge);
    }
    let y_max = y_max.to_i64().expect("bounded by the search limit");
    // x^2 - m y^2 = scale * N with scale 4 in the half-integral model
    let scale = if half { 4u32 } else { 1 };
    let mut best: Option<(i64, FieldElement)> = None;
    for y in -y_max..=y_max {
        let my2 = &m * y * y;
        for sign in [1i32, -1] {
            let rhs = &two_j * scale * sign + &my2;
            if rhs.is_negative() {
                continue;
            }
            let r = int::isqrt(&rhs);
            if &r * &r != rhs {
                continue;
            }
            for x in [r.clone(), -r.clone()] {
                if half && (&x - y).is_odd() {
                    continue;
                }
                let gamma = if half {
                    let two = BigInt::from(2);
                    k.element(vec![
                        num_rational::BigRational::new(x.clone(), two.clone()),
                        num_rational::BigRational::new(BigInt::from(y), two),
                    ])?
                } else {
                    k.element(vec![
                        num_rational::BigRational::from_integer(x.clone()),
                        num_rational::BigRational::from_integer(BigInt::from(y)),
                    ])?
                };
                if gamma.is_zero() || ord_at(k, p, &gamma)? != j as i64 {
                    continue;
                }
                let better = match &best {
                    None => true,
                    Some((by, bg)) => (y.abs(), std::cmp::Reverse(&gamma)) < (*by, std::cmp::Reverse(bg)),
                };
                if better {
                    best = Some((y.abs(), gamma));
                }
            }
        }
    }
    Ok(match best {
        Some((_, g)) => Found::Generator(g),
        None => Found::None,
    })
}

/// The fundamental unit `ε > 1` of a real quadratic field, read off from
/// the continued fraction of `sqrt(m)` or `(1 + sqrt(m))/2`.
pub fn fundamental_unit(k: &NumberField) -> Result<FieldElement> {
    if k.kind() != FieldKind::Quadratic || k.parameter() < 0 {
        return Err(Error::WrongFamily(format!("{} is not real quadratic", k.name())));
    }
    let m = BigInt::from(k.parameter());
    let half = k.parameter().rem_euclid(4) == 1;
    let root = int::isqrt(&m);
    let (mut p, mut q) = if half {
        (BigInt::one(), BigInt::from(2))
    } else {
        (BigInt::zero(), BigInt::one())
    };
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut kk) = (BigInt::one(), BigInt::zero());
    loop {
        let a = (&p + &root).div_floor(&q);
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &kk + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut kk, k_next);
        // h / kk approximates the generator; h - kk*generator is a unit
        // exactly when its norm is +-1
        let norm = if half {
            &h * &h - &h * &kk - &kk * &kk * ((&m - 1u32) / 4u32)
        } else {
            &h * &h - &m * &kk * &kk
        };
        if norm.magnitude().is_one() {
            // the conjugate h - kk*generator' is the unit larger than 1
            let two = BigInt::from(2);
            return if half {
                k.element(vec![
                    num_rational::BigRational::new(&h * 2u32 - &kk, two.clone()),
                    num_rational::BigRational::new(kk.clone(), two),
                ])
            } else {
                k.element(vec![
                    num_rational::BigRational::from_integer(h.clone()),
                    num_rational::BigRational::from_integer(kk.clone()),
                ])
            };
        }
        p = &a * &q - &p;
        q = (&m - &p * &p) / &q;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sunit::{compute_st, is_s_unit};

    fn describe(k: &NumberField) -> SUnitGroupDesc {
        sunit_describe(k, &compute_st(k)).unwrap()
    }

    #[test]
    fn imaginary_quadratic_examples() {
        let k = NumberField::quadratic(-5).unwrap();
        let d = describe(&k);
        assert_eq!(d.torsion(), &k.from_int(-1));
        assert_eq!(d.torsion_order(), 2);
        assert_eq!(d.generators(), &[k.from_int(2)]);
        assert_eq!(d.completeness(), Completeness::Exact);

        let k = NumberField::quadratic(-1).unwrap();
        let d = describe(&k);
        assert_eq!(d.torsion_order(), 4);
        assert_eq!(d.generators(), &[k.element_from_ints(&[1, 1])]);

        let k = NumberField::quadratic(-2).unwrap();
        assert_eq!(describe(&k).generators(), &[k.theta()]);

        let k = NumberField::quadratic(-3).unwrap();
        let d = describe(&k);
        assert_eq!(d.torsion_order(), 6);
        assert_eq!(d.generators(), &[k.from_int(2)]);

        // 2 splits in Q(sqrt(-15)) into two primes of order 2
        let k = NumberField::quadratic(-15).unwrap();
        let d = describe(&k);
        assert_eq!(d.generators().len(), 2);
        assert_eq!(d.generators()[0], k.from_int(2));
        assert_eq!(k.norm(&d.generators()[1]), num_rational::BigRational::from_integer(4.into()));
    }

    #[test]
    fn cyclotomic_sixteen() {
        let k = NumberField::cyclotomic2(4).unwrap();
        let d = describe(&k);
        assert_eq!(d.torsion_order(), 16);
        assert_eq!(d.generators().len(), 4);
        assert_eq!(d.completeness(), Completeness::FiniteIndexSubgroup);
        let s = compute_st(&k);
        for g in d.generators() {
            assert!(is_s_unit(&k, g, s.s()).unwrap());
        }
    }

    #[test]
    fn fundamental_units() {
        let cases: [(i64, &str); 5] = [
            (2, "1;1"),
            (3, "2;1"),
            (5, "1/2;1/2"),
            (13, "3/2;1/2"),
            (94, "2143295;221064"),
        ];
        for (m, expected) in cases {
            let k = NumberField::quadratic(m).unwrap();
            assert_eq!(fundamental_unit(&k).unwrap(), k.parse_element(expected).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn real_quadratic_generators_are_s_units() {
        for m in [2i64, 3, 5, 6, 7, 10, 15, 17, 41, 65] {
            let k = NumberField::quadratic(m).unwrap();
            let st = compute_st(&k);
            let d = sunit_describe(&k, &st).unwrap();
            assert_eq!(d.completeness(), Completeness::Exact, "m = {m}");
            for g in d.generators() {
                assert!(is_s_unit(&k, g, st.s()).unwrap(), "m = {m}");
            }
            let rank = 1 + st.s().len();
            assert_eq!(d.generators().len(), rank, "m = {m}");
        }
    }
}
