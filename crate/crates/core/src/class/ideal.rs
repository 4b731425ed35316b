use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::lattice;
use crate::error::{Error, Result};
use crate::nf::{FieldElement, NumberField, PrimeIdeal};

/// Nonzero integral ideal of an imaginary quadratic field, stored in Hermite
/// normal form `a Z + (b + c omega) Z` with `c | a`, `c | b`, `0 <= b < a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealIQ {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl IdealIQ {
    /// The ideal generated by the given integral elements.
    pub fn from_generators(k: &NumberField, gens: &[FieldElement]) -> Result<Self> {
        check_quadratic(k)?;
        let omega = k.omega();
        let mut rows = Vec::new();
        for g in gens {
            if !k.is_integral(g) {
                return Err(Error::PreconditionViolation(format!(
                    "ideal generator {} is not integral",
                    k.fmt_element(g)
                )));
            }
            if g.is_zero() {
                continue;
            }
            for x in [g.clone(), k.mul(g, &omega)] {
                let c = k.integral_coords(&x);
                // order (omega, 1) so the first HNF row carries the omega pivot
                rows.push(vec![c[1].to_integer(), c[0].to_integer()]);
            }
        }
        if rows.is_empty() {
            return Err(Error::PreconditionViolation("zero ideal".into()));
        }
        let h = lattice::hnf(&rows, 2);
        let (c, b, a) = (h[0][0].clone(), h[0][1].clone(), h[1][1].clone());
        Ok(IdealIQ {
            b: b.mod_floor(&a),
            a,
            c,
        })
    }

    pub fn principal(k: &NumberField, g: &FieldElement) -> Result<Self> {
        Self::from_generators(k, std::slice::from_ref(g))
    }

    pub fn unit(k: &NumberField) -> Result<Self> {
        Self::principal(k, &k.one())
    }

    pub fn from_prime(k: &NumberField, p: &PrimeIdeal) -> Result<Self> {
        let ell = k.from_int(p.residue_characteristic() as i64);
        Self::from_generators(k, &[ell, p.generator().clone()])
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.c
    }

    /// Z-basis `(a, b + c omega)`.
    pub fn basis(&self, k: &NumberField) -> [FieldElement; 2] {
        [
            k.from_integral_coords(&[self.a.clone(), BigInt::zero()]),
            k.from_integral_coords(&[self.b.clone(), self.c.clone()]),
        ]
    }

    pub fn hnf(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    pub fn mul(&self, k: &NumberField, other: &IdealIQ) -> Result<Self> {
        let gens: Vec<FieldElement> = self
            .basis(k)
            .iter()
            .flat_map(|x| other.basis(k).map(|y| k.mul(x, &y)))
            .collect();
        Self::from_generators(k, &gens)
    }

    pub fn pow(&self, k: &NumberField, e: u32) -> Result<Self> {
        let mut acc = Self::unit(k)?;
        for _ in 0..e {
            acc = acc.mul(k, self)?;
        }
        Ok(acc)
    }

    pub fn conjugate(&self, k: &NumberField) -> Result<Self> {
        let gens: Vec<FieldElement> = self.basis(k).iter().map(|x| k.conjugate(x, -1)).collect();
        Self::from_generators(k, &gens)
    }

    pub fn contains(&self, k: &NumberField, x: &FieldElement) -> bool {
        let coords = k.integral_coords(x);
        if !coords.iter().all(|q| q.is_integer()) {
            return false;
        }
        let (u, v) = (coords[0].to_integer(), coords[1].to_integer());
        if !(&v % &self.c).is_zero() {
            return false;
        }
        let y = &v / &self.c;
        ((u - y * &self.b) % &self.a).is_zero()
    }

    /// Primitive part `[A, b' + omega]` and its content `c`.
    pub(crate) fn primitive_part(&self) -> (BigInt, BigInt, BigInt) {
        (&self.a / &self.c, &self.b / &self.c, self.c.clone())
    }
}

pub(crate) fn check_quadratic(k: &NumberField) -> Result<()> {
    if !k.is_imaginary_quadratic() {
        return Err(Error::UnsupportedField(format!(
            "{} is not imaginary quadratic",
            k.name()
        )));
    }
    Ok(())
}

/// `(N(x), Tr(x * conj(y)))` for integral `x`, `y` in an imaginary quadratic field.
pub(crate) fn norm_and_pairing(k: &NumberField, x: &FieldElement, y: &FieldElement) -> (BigInt, BigInt) {
    let n = k.norm(x).to_integer();
    let t = k.trace(&k.mul(x, &k.conjugate(y, -1))).to_integer();
    debug_assert!(!n.is_negative());
    (n, t)
}
