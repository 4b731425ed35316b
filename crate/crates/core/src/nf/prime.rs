//! Prime ideals of supported fields and valuations at them.
//!
//! Every prime is given by a two-element representation `(ell, g)`. Ramified
//! primes in both families are the only prime above their `ell`, so their
//! valuations come from the norm. The remaining primes are unramified and
//! sit over a rational prime with several primes above it; for those the
//! factor of the defining polynomial is Hensel-lifted and valuations are read
//! off in the unramified completion `Z_ell[t]/(G)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::field::{FieldElement, FieldKind, NumberField};
use crate::arith::{int, polymod};
use crate::error::{Error, Result};

const DEFAULT_PRECISION: u32 = 40;

/// Local generator for unramified primes: `theta` itself, or
/// `omega = (1 + sqrt(m)) / 2` at 2 when `m ≡ 1 (mod 8)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum LocalGenerator {
    Theta,
    Omega,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum LocalModel {
    /// The only prime above `ell`: `f * ord_P(x) = v_ell(N(x))`.
    Unique,
    Unramified {
        generator: LocalGenerator,
        /// Monic minimal polynomial of the local generator over Z.
        poly: Vec<BigInt>,
        /// Irreducible factor of `poly` mod `ell` belonging to this prime.
        factor: Vec<u64>,
        /// `factor` lifted to precision `DEFAULT_PRECISION`.
        lifted: Vec<BigInt>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeIdeal {
    ell: u64,
    e: u32,
    f: u32,
    generator: FieldElement,
    local: LocalModel,
}

impl PrimeIdeal {
    pub fn residue_characteristic(&self) -> u64 {
        self.ell
    }

    pub fn ramification_index(&self) -> u32 {
        self.e
    }

    pub fn residue_degree(&self) -> u32 {
        self.f
    }

    /// Second element `g` of the two-element representation `(ell, g)`.
    pub fn generator(&self) -> &FieldElement {
        &self.generator
    }

    pub fn norm(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.ell), self.f as usize)
    }

    pub fn is_unique_above(&self) -> bool {
        self.local == LocalModel::Unique
    }

    pub fn describe(&self, k: &NumberField) -> String {
        format!("({}, {})", self.ell, k.fmt_element(&self.generator))
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, [{}])", self.ell, self.generator.to_coord_string())
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn unique(k: &NumberField, ell: u64, e: u32, f: u32, generator: FieldElement) -> PrimeIdeal {
    debug_assert_eq!((e * f) as usize, k.degree());
    PrimeIdeal {
        ell,
        e,
        f,
        generator,
        local: LocalModel::Unique,
    }
}

fn unramified(
    ell: u64,
    generator: FieldElement,
    local_gen: LocalGenerator,
    poly: Vec<BigInt>,
    factor: Vec<u64>,
) -> PrimeIdeal {
    let lifted = polymod::hensel_lift(&poly, &factor, ell, DEFAULT_PRECISION);
    PrimeIdeal {
        ell,
        e: 1,
        f: (factor.len() - 1) as u32,
        generator,
        local: LocalModel::Unramified {
            generator: local_gen,
            poly,
            factor,
            lifted,
        },
    }
}

/// `g(theta)` for an integer polynomial `g`, or `g(omega)` in the omega case.
fn eval_factor(k: &NumberField, factor: &[u64], gen: &FieldElement) -> FieldElement {
    factor.iter().rev().fold(k.zero(), |acc, &c| {
        let shifted = k.mul(&acc, gen);
        &shifted + &k.from_int(c as i64)
    })
}

/// Factor the rational prime `ell` in `k`. Primes above `ell` are ordered by
/// their two-element representation; for split primes with linear factor
/// `t + r` this is increasing `r`.
pub fn factor_prime(k: &NumberField, ell: u64) -> Result<Vec<PrimeIdeal>> {
    if !int::is_prime(ell) {
        return Err(Error::PreconditionViolation(format!("{ell} is not prime")));
    }
    if ell >= 1 << 31 {
        return Err(Error::PreconditionViolation(format!(
            "prime {ell} too large for residue arithmetic"
        )));
    }
    let n = k.degree() as u32;
    let theta = k.theta();
    let out = match (k.kind(), ell) {
        (FieldKind::Quadratic, 2) => {
            let m = k.parameter();
            match m.rem_euclid(8) {
                2 | 6 => vec![unique(k, 2, 2, 1, theta)],
                3 | 7 => vec![unique(k, 2, 2, 1, &k.one() + &theta)],
                5 => vec![unique(k, 2, 1, 2, k.from_int(2))],
                1 => {
                    // omega^2 - omega - (m-1)/4 ≡ omega (omega + 1) mod 2
                    let poly = ints(&[-(m - 1) / 4, -1, 1]);
                    let omega = k.omega();
                    [vec![0u64, 1], vec![1, 1]]
                        .into_iter()
                        .map(|factor| {
                            let g = eval_factor(k, &factor, &omega);
                            unramified(2, g, LocalGenerator::Omega, poly.clone(), factor)
                        })
                        .collect()
                }
                _ => unreachable!("squarefree m is not divisible by 4"),
            }
        }
        (FieldKind::Quadratic, _) => {
            let m = k.parameter();
            if m.rem_euclid(ell as i64) == 0 {
                vec![unique(k, ell, 2, 1, theta)]
            } else if int::kronecker(m, ell) == -1 {
                vec![unique(k, ell, 1, 2, k.from_int(ell as i64))]
            } else {
                let poly = k.defining_polynomial().to_vec();
                polymod::factor_squarefree(&polymod::reduce(&poly, ell), ell)
                    .into_iter()
                    .map(|factor| {
                        let g = eval_factor(k, &factor, &theta);
                        unramified(ell, g, LocalGenerator::Theta, poly.clone(), factor)
                    })
                    .collect()
            }
        }
        (FieldKind::Cyclotomic2, 2) => vec![unique(k, 2, n, 1, &k.one() - &theta)],
        (FieldKind::Cyclotomic2, _) => {
            let poly = k.defining_polynomial().to_vec();
            let factors = polymod::factor_squarefree(&polymod::reduce(&poly, ell), ell);
            if factors.len() == 1 {
                vec![unique(k, ell, 1, n, k.from_int(ell as i64))]
            } else {
                factors
                    .into_iter()
                    .map(|factor| {
                        let g = eval_factor(k, &factor, &theta);
                        unramified(ell, g, LocalGenerator::Theta, poly.clone(), factor)
                    })
                    .collect()
            }
        }
    };
    Ok(out)
}

/// Primes above 2.
pub fn factor_two(k: &NumberField) -> Vec<PrimeIdeal> {
    factor_prime(k, 2).expect("2 is a supported prime")
}

/// `ord_P(x)`.
pub fn ord_at(k: &NumberField, p: &PrimeIdeal, x: &FieldElement) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    if let Some(q) = x.as_rational() {
        return Ok(p.e as i64 * int::val_rat(q, p.ell));
    }
    let (d, alpha) = x.clear_denominators();
    let denom_part = p.e as i64 * int::val_int(&d, p.ell) as i64;
    Ok(ord_integral(k, p, &alpha) - denom_part)
}

/// Valuation of a nonzero element of `Z[theta]` given by integer coordinates.
pub(crate) fn ord_integral(k: &NumberField, p: &PrimeIdeal, alpha: &[BigInt]) -> i64 {
    match &p.local {
        LocalModel::Unique => {
            let norm = k.norm_int(alpha);
            let v = int::val_int(&norm, p.ell);
            debug_assert_eq!(v % p.f, 0);
            (v / p.f) as i64
        }
        LocalModel::Unramified {
            generator,
            poly,
            factor,
            lifted,
        } => {
            let coords = match generator {
                LocalGenerator::Theta => alpha.to_vec(),
                // a + b sqrt(m) = (a - b) + 2b omega
                LocalGenerator::Omega => vec![&alpha[0] - &alpha[1], &alpha[1] * 2],
            };
            let mut prec = DEFAULT_PRECISION;
            let mut big_g = lifted.clone();
            loop {
                let modulus = polymod::pow_big(p.ell, prec);
                let r = polymod::zrem_monic(&coords, &big_g, &modulus);
                if let Some(v) = polymod::min_valuation(&r, p.ell) {
                    return v as i64;
                }
                prec *= 2;
                big_g = polymod::hensel_lift(poly, factor, p.ell, prec);
            }
        }
    }
}

/// `ord_P` of a rational number, `e * v_ell(q)`.
pub fn ord_rational(p: &PrimeIdeal, q: &num_rational::BigRational) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    Ok(p.e as i64 * int::val_rat(q, p.ell))
}

/// Canonical ordering key for primes: `(ell, generator coordinates)`.
pub fn prime_order_key(p: &PrimeIdeal) -> (u64, FieldElement) {
    (p.ell, p.generator.clone())
}
