//! Class groups of imaginary quadratic fields through reduced binary
//! quadratic forms. Classes are compared by their reduced form only; no
//! composition law is implemented.

mod forms;
mod ideal;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub use forms::{reduced_forms, QuadForm};
pub use ideal::IdealIQ;

use crate::arith::int;
use crate::error::{Error, Result};
use crate::nf::{factor_prime, FieldElement, NumberField, PrimeIdeal};
use ideal::{check_quadratic, norm_and_pairing};

/// Reduced form attached to the ideal class of `ideal`.
pub fn ideal_to_reduced_form(k: &NumberField, ideal: &IdealIQ) -> Result<QuadForm> {
    check_quadratic(k)?;
    let d = k.discriminant();
    let (a, b, _) = ideal.primitive_part();
    // b + omega = (-B + sqrt(D)) / 2
    let t = if d.is_odd() { 1u32 } else { 0 };
    let big_b: BigInt = -(&b * 2u32 + t);
    let big_c = (&big_b * &big_b - d) / (&a * 4u32);
    Ok(QuadForm {
        a,
        b: big_b,
        c: big_c,
    }
    .reduce())
}

pub fn class_number(k: &NumberField) -> Result<u64> {
    check_quadratic(k)?;
    let d = k.discriminant().to_i64().expect("discriminant fits in i64");
    Ok(reduced_forms(d).len() as u64)
}

pub fn is_principal(k: &NumberField, ideal: &IdealIQ) -> Result<bool> {
    Ok(ideal_to_reduced_form(k, ideal)? == QuadForm::principal(k.discriminant()))
}

/// Order of the class of `ideal` in the class group.
pub fn class_order(k: &NumberField, ideal: &IdealIQ) -> Result<u32> {
    let principal = QuadForm::principal(k.discriminant());
    let mut power = ideal.clone();
    for j in 1.. {
        if ideal_to_reduced_form(k, &power)? == principal {
            return Ok(j);
        }
        power = power.mul(k, ideal)?;
    }
    unreachable!()
}

/// Lagrange reduction of the ideal lattice with respect to the norm form.
fn reduced_basis(k: &NumberField, ideal: &IdealIQ) -> [FieldElement; 2] {
    let [mut x, mut y] = ideal.basis(k);
    loop {
        let (nx, _) = norm_and_pairing(k, &x, &x);
        let (ny, _) = norm_and_pairing(k, &y, &y);
        if ny < nx {
            std::mem::swap(&mut x, &mut y);
            continue;
        }
        let (_, t) = norm_and_pairing(k, &x, &y);
        // mu = round(t / 2 N(x))
        let two_nx = &nx * 2u32;
        let mu = (&t + &nx).div_floor(&two_nx);
        if mu.is_zero() {
            return [x, y];
        }
        let shift = x.scale(&num_rational::BigRational::from_integer(mu));
        y = &y - &shift;
    }
}

/// A generator of `ideal` if it is principal. The generator is canonical:
/// among the unit multiples, the one with lexicographically largest
/// power-basis coordinates.
pub fn principal_generator(k: &NumberField, ideal: &IdealIQ) -> Result<Option<FieldElement>> {
    check_quadratic(k)?;
    let target = ideal.norm();
    let [x, y] = reduced_basis(k, ideal);
    let (a, _) = norm_and_pairing(k, &x, &x);
    let (c, _) = norm_and_pairing(k, &y, &y);
    let (_, b) = norm_and_pairing(k, &x, &y);
    // N(u x + v y) = a u^2 + b uv + c v^2 and
    // 4a N = (2au + bv)^2 + (4ac - b^2) v^2
    let delta = &a * &c * 4u32 - &b * &b;
    debug_assert!(delta.is_positive());
    let four_a_n = &a * &target * 4;
    let vmax = int::isqrt(&(&four_a_n / &delta));
    let mut found: Vec<FieldElement> = Vec::new();
    let mut v: BigInt = -vmax.clone();
    while v <= vmax {
        let s: BigInt = &four_a_n - &delta * &v * &v;
        if !s.is_negative() {
            let r = int::isqrt(&s);
            if &r * &r == s {
                for root in [r.clone(), -r.clone()] {
                    let num = root - &b * &v;
                    let two_a = &a * 2u32;
                    if (&num % &two_a).is_zero() {
                        let u = num / two_a;
                        let rat = |z: &BigInt| num_rational::BigRational::from_integer(z.clone());
                        let g = &x.scale(&rat(&u)) + &y.scale(&rat(&v));
                        found.push(g);
                    }
                }
            }
        }
        v += 1;
    }
    Ok(found.into_iter().max())
}

/// One odd prime ideal of minimal norm in every ideal class, sorted by the
/// reduced form of its class (principal class first). Among primes of equal
/// norm in a class the first in [`factor_prime`] order wins, i.e. the
/// representation `(ell, theta + r)` with smallest `r`.
pub fn representatives_h(k: &NumberField) -> Result<Vec<PrimeIdeal>> {
    let h = class_number(k)? as usize;
    let mut bound = 16u64;
    loop {
        let mut candidates: Vec<(BigInt, u64, usize, PrimeIdeal)> = Vec::new();
        for ell in int::primes_up_to(bound).filter(|&l| l != 2) {
            for (i, p) in factor_prime(k, ell)?.into_iter().enumerate() {
                if p.norm() <= BigInt::from(bound) {
                    candidates.push((p.norm(), ell, i, p));
                }
            }
        }
        candidates.sort_by(|x, y| (&x.0, x.1, x.2).cmp(&(&y.0, y.1, y.2)));
        let mut by_class: BTreeMap<QuadForm, PrimeIdeal> = BTreeMap::new();
        for (_, _, _, p) in candidates {
            let form = ideal_to_reduced_form(k, &IdealIQ::from_prime(k, &p)?)?;
            by_class.entry(form).or_insert(p);
        }
        if by_class.len() == h {
            return Ok(by_class.into_values().collect());
        }
        bound = bound.checked_mul(2).ok_or_else(|| {
            Error::PreconditionViolation("class representatives search overflowed".into())
        })?;
    }
}
