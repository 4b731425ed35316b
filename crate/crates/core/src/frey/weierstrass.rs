use crate::error::Result;
use crate::nf::{FieldElement, NumberField};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassModel {
    pub a1: FieldElement,
    pub a2: FieldElement,
    pub a3: FieldElement,
    pub a4: FieldElement,
    pub a6: FieldElement,
}

impl WeierstrassModel {
    /// `y^2 = x(x − A)(x + B) = x^3 + (B − A) x^2 − AB x`.
    pub fn two_torsion(k: &NumberField, big_a: &FieldElement, big_b: &FieldElement) -> Self {
        WeierstrassModel {
            a1: k.zero(),
            a2: big_b - big_a,
            a3: k.zero(),
            a4: -&k.mul(big_a, big_b),
            a6: k.zero(),
        }
    }

    /// `(b2, b4, b6, b8)`.
    pub fn b_invariants(&self, k: &NumberField) -> [FieldElement; 4] {
        let m = |x: &FieldElement, y: &FieldElement| k.mul(x, y);
        let n = |c: i64, x: &FieldElement| k.mul(&k.from_int(c), x);
        let b2 = &m(&self.a1, &self.a1) + &n(4, &self.a2);
        let b4 = &m(&self.a1, &self.a3) + &n(2, &self.a4);
        let b6 = &m(&self.a3, &self.a3) + &n(4, &self.a6);
        // a1^2 a6 + 4 a2 a6 − a1 a3 a4 + a2 a3^2 − a4^2
        let b8 = &(&(&(&m(&m(&self.a1, &self.a1), &self.a6) + &n(4, &m(&self.a2, &self.a6)))
            - &m(&m(&self.a1, &self.a3), &self.a4))
            + &m(&self.a2, &m(&self.a3, &self.a3)))
            - &m(&self.a4, &self.a4);
        [b2, b4, b6, b8]
    }

    pub fn c4(&self, k: &NumberField) -> FieldElement {
        let [b2, b4, _, _] = self.b_invariants(k);
        &k.mul(&b2, &b2) - &k.mul(&k.from_int(24), &b4)
    }

    /// `Δ = −b2^2 b8 − 8 b4^3 − 27 b6^2 + 9 b2 b4 b6`.
    pub fn discriminant(&self, k: &NumberField) -> FieldElement {
        let [b2, b4, b6, b8] = self.b_invariants(k);
        let m = |x: &FieldElement, y: &FieldElement| k.mul(x, y);
        let n = |c: i64, x: &FieldElement| k.mul(&k.from_int(c), x);
        let t1 = -&m(&m(&b2, &b2), &b8);
        let t2 = n(8, &m(&m(&b4, &b4), &b4));
        let t3 = n(27, &m(&b6, &b6));
        let t4 = n(9, &m(&m(&b2, &b4), &b6));
        &(&(&t1 - &t2) - &t3) + &t4
    }

    pub fn j_invariant(&self, k: &NumberField) -> Result<FieldElement> {
        let c4 = self.c4(k);
        k.div(&k.pow(&c4, 3)?, &self.discriminant(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_curves() {
        let k = NumberField::quadratic(-1).unwrap();
        // y^2 = x^3 - x: c4 = 48, Δ = 64, j = 1728
        let e = WeierstrassModel::two_torsion(&k, &k.one(), &k.one());
        assert_eq!(e.c4(&k), k.from_int(48));
        assert_eq!(e.discriminant(&k), k.from_int(64));
        assert_eq!(e.j_invariant(&k).unwrap(), k.from_int(1728));
        // y^2 + y = x^3 - x^2 (11a3): c4 = 16, Δ = -11
        let e = WeierstrassModel {
            a1: k.zero(),
            a2: k.from_int(-1),
            a3: k.one(),
            a4: k.zero(),
            a6: k.zero(),
        };
        assert_eq!(e.c4(&k), k.from_int(16));
        assert_eq!(e.discriminant(&k), k.from_int(-11));
    }
}
