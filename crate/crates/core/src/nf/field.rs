use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{int, lattice};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Quadratic,
    Cyclotomic2,
}

impl FieldKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "quadratic" => Some(FieldKind::Quadratic),
            "cyclotomic2" | "cyclotomic" => Some(FieldKind::Cyclotomic2),
            _ => None,
        }
    }
}

/// A supported number field: `Q(sqrt(m))` with `m` squarefree, or
/// `Q(zeta_{2^k})` with `2 <= k <= 5`.
///
/// Both families have a defining polynomial of the shape `x^n - c`
/// (`x^2 - m`, resp. `x^{2^{k-1}} + 1`), so power-basis multiplication only
/// needs the single reduction rule `theta^n = c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    kind: FieldKind,
    parameter: i64,
    degree: usize,
    signature: (usize, usize),
    discriminant: BigInt,
    poly: Vec<BigInt>,
    reduction: i64,
}

/// Exact element of a number field, stored as power-basis coordinates in
/// lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub(crate) Vec<BigRational>);

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl FieldElement {
    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.0[0].is_one() && self.0[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.0[1..].iter().all(Zero::is_zero).then(|| &self.0[0])
    }

    /// Common denominator `d` and integer coordinates of `d * self`.
    pub fn clear_denominators(&self) -> (BigInt, Vec<BigInt>) {
        let d = int::common_denominator(&self.0);
        let ints = self.0.iter().map(|q| &d / q.denom() * q.numer()).collect();
        (d, ints)
    }

    /// The element with coordinates `ints[i] / d`.
    fn from_scaled(ints: Vec<BigInt>, d: &BigInt) -> FieldElement {
        if d.is_one() {
            return FieldElement(ints.into_iter().map(BigRational::from_integer).collect());
        }
        FieldElement(ints.into_iter().map(|z| BigRational::new(z, d.clone())).collect())
    }

    /// Coordinate string `c0;c1;...;c(n-1)` used by solution lists and reports.
    pub fn to_coord_string(&self) -> String {
        self.0
            .iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn scale(&self, q: &BigRational) -> FieldElement {
        FieldElement(self.0.iter().map(|c| c * q).collect())
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement(self.0.iter().map(|a| -a).collect())
    }
}

/// Parse a rational written `p`, `p/q` or `-p/q`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// For `x` in `Z[t]/(t^n - c)` with `n` a power of two, an integer vector
/// `y` and the integer `N = N(x)` with `x y = N`. Since `x(t) x(-t)` lies in
/// the subring generated by `t^2`, the norm halves the degree at each step.
fn norm_cofactor(x: &[BigInt], c: &BigInt) -> (Vec<BigInt>, BigInt) {
    let n = x.len();
    if n == 1 {
        return (vec![BigInt::one()], x[0].clone());
    }
    let sigma: Vec<BigInt> = x
        .iter()
        .enumerate()
        .map(|(i, v)| if i % 2 == 1 { -v } else { v.clone() })
        .collect();
    let y = mul_reduce(x, &sigma, c);
    let half: Vec<BigInt> = y.into_iter().step_by(2).collect();
    let (cof_half, norm) = norm_cofactor(&half, c);
    let mut lifted = vec![BigInt::zero(); n];
    for (i, v) in cof_half.into_iter().enumerate() {
        lifted[2 * i] = v;
    }
    (mul_reduce(&sigma, &lifted, c), norm)
}

/// Multiply two coordinate vectors modulo `x^n - c`.
pub(crate) fn mul_reduce<T>(a: &[T], b: &[T], c: &T) -> Vec<T>
where
    T: Clone + Zero,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
{
    let n = a.len();
    let mut wide = vec![T::zero(); 2 * n - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            wide[i + j] = wide[i + j].clone() + x * y;
        }
    }
    for i in (n..2 * n - 1).rev() {
        let hi = std::mem::replace(&mut wide[i], T::zero());
        if !hi.is_zero() {
            wide[i - n] = wide[i - n].clone() + &hi * c;
        }
    }
    wide.truncate(n);
    wide
}

impl NumberField {
    pub fn make(kind: FieldKind, parameter: i64) -> Result<Self> {
        match kind {
            FieldKind::Quadratic => Self::quadratic(parameter),
            FieldKind::Cyclotomic2 => {
                let k = u32::try_from(parameter)
                    .map_err(|_| Error::UnsupportedField(format!("k = {parameter}")))?;
                Self::cyclotomic2(k)
            }
        }
    }

    /// `Q(sqrt(m))` for squarefree `m ∉ {0, 1}`.
    pub fn quadratic(m: i64) -> Result<Self> {
        if m == 0 || m == 1 || !int::is_squarefree(m) {
            return Err(Error::UnsupportedField(format!(
                "quadratic parameter m = {m} must be squarefree and not 0 or 1"
            )));
        }
        let discriminant = if m.rem_euclid(4) == 1 {
            BigInt::from(m)
        } else {
            BigInt::from(4 * m)
        };
        Ok(NumberField {
            kind: FieldKind::Quadratic,
            parameter: m,
            degree: 2,
            signature: if m > 0 { (2, 0) } else { (0, 1) },
            discriminant,
            poly: vec![BigInt::from(-m), BigInt::zero(), BigInt::one()],
            reduction: m,
        })
    }

    /// `Q(zeta_{2^k})` for `2 <= k <= 5`.
    pub fn cyclotomic2(k: u32) -> Result<Self> {
        if !(2..=5).contains(&k) {
            return Err(Error::UnsupportedField(format!(
                "cyclotomic2 parameter k = {k} must lie in 2..=5"
            )));
        }
        let n = 1usize << (k - 1);
        let mut poly = vec![BigInt::zero(); n + 1];
        poly[0] = BigInt::one();
        poly[n] = BigInt::one();
        // |disc| = 2^{(k-1) 2^{k-1}}, sign (-1)^{r2}
        let r2 = n / 2;
        let mut discriminant = num_traits::pow(BigInt::from(2), (k as usize - 1) * n);
        if r2 % 2 == 1 {
            discriminant = -discriminant;
        }
        Ok(NumberField {
            kind: FieldKind::Cyclotomic2,
            parameter: k as i64,
            degree: n,
            signature: (0, r2),
            discriminant,
            poly,
            reduction: -1,
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn parameter(&self) -> i64 {
        self.parameter
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }

    /// Monic defining polynomial, lowest degree first.
    pub fn defining_polynomial(&self) -> &[BigInt] {
        &self.poly
    }

    pub fn is_imaginary_quadratic(&self) -> bool {
        self.kind == FieldKind::Quadratic && self.parameter < 0
    }

    /// Order of the cyclotomic root of unity `theta` (cyclotomic fields only).
    pub fn root_of_unity_order(&self) -> Option<usize> {
        (self.kind == FieldKind::Cyclotomic2).then_some(2 * self.degree)
    }

    /// Short identifier, e.g. `Q(sqrt(-5))` or `Q(zeta_16)`.
    pub fn name(&self) -> String {
        match self.kind {
            FieldKind::Quadratic => format!("Q(sqrt({}))", self.parameter),
            FieldKind::Cyclotomic2 => format!("Q(zeta_{})", 2 * self.degree),
        }
    }

    fn generator_symbol(&self) -> String {
        match self.kind {
            FieldKind::Quadratic => format!("sqrt({})", self.parameter),
            FieldKind::Cyclotomic2 => "z".to_string(),
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(vec![BigRational::zero(); self.degree])
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(rat(n))
    }

    pub fn from_rational(&self, q: BigRational) -> FieldElement {
        let mut e = self.zero();
        e.0[0] = q;
        e
    }

    /// The power-basis generator `theta` (`sqrt(m)` or `zeta`).
    pub fn theta(&self) -> FieldElement {
        let mut e = self.zero();
        e.0[1] = BigRational::one();
        e
    }

    pub fn theta_pow(&self, k: i64) -> FieldElement {
        match self.root_of_unity_order() {
            Some(order) => {
                let k = k.rem_euclid(order as i64) as usize;
                let mut e = self.zero();
                if k < self.degree {
                    e.0[k] = BigRational::one();
                } else {
                    e.0[k - self.degree] = -BigRational::one();
                }
                e
            }
            None => self.pow(&self.theta(), k).expect("theta is nonzero"),
        }
    }

    pub fn element(&self, coords: Vec<BigRational>) -> Result<FieldElement> {
        if coords.len() != self.degree {
            return Err(Error::PreconditionViolation(format!(
                "expected {} coordinates, got {}",
                self.degree,
                coords.len()
            )));
        }
        Ok(FieldElement(coords))
    }

    pub fn element_from_ints(&self, coords: &[i64]) -> FieldElement {
        let mut e = self.zero();
        for (slot, &c) in e.0.iter_mut().zip(coords) {
            *slot = rat(c);
        }
        e
    }

    /// Parse `c0;c1;...` power-basis coordinates. A single rational is
    /// accepted and embedded as a constant.
    pub fn parse_element(&self, s: &str) -> std::result::Result<FieldElement, String> {
        let parts: Vec<&str> = s.split(';').collect();
        let coords = parts
            .iter()
            .map(|p| parse_rational(p).ok_or_else(|| format!("bad rational {:?}", p.trim())))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if coords.len() == 1 {
            return Ok(self.from_rational(coords.into_iter().next().unwrap()));
        }
        if coords.len() != self.degree {
            return Err(format!(
                "expected {} coordinates, got {}",
                self.degree,
                coords.len()
            ));
        }
        Ok(FieldElement(coords))
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let (dx, xs) = x.clear_denominators();
        let (dy, ys) = y.clear_denominators();
        FieldElement::from_scaled(self.mul_int(&xs, &ys), &(dx * dy))
    }

    /// Integer-coordinate multiplication in `Z[theta]`.
    pub(crate) fn mul_int(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        mul_reduce(x, y, &BigInt::from(self.reduction))
    }

    /// Exponents `a` of the automorphisms `theta -> theta^a` (cyclotomic) or
    /// `sqrt(m) -> a * sqrt(m)` (quadratic), identity first.
    pub fn automorphisms(&self) -> Vec<i64> {
        match self.kind {
            FieldKind::Quadratic => vec![1, -1],
            FieldKind::Cyclotomic2 => (1..2 * self.degree as i64).step_by(2).collect(),
        }
    }

    pub fn conjugate(&self, x: &FieldElement, a: i64) -> FieldElement {
        match self.kind {
            FieldKind::Quadratic => {
                let mut y = x.clone();
                if a == -1 {
                    y.0[1] = -&y.0[1];
                }
                y
            }
            FieldKind::Cyclotomic2 => {
                let n = self.degree;
                let order = 2 * n;
                let mut y = self.zero();
                for (i, c) in x.0.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let idx = (i as i64 * a).rem_euclid(order as i64) as usize;
                    if idx < n {
                        y.0[idx] += c;
                    } else {
                        y.0[idx - n] -= c;
                    }
                }
                y
            }
        }
    }

    /// `x^{-1} = d y / N(d x)` where `d x` is integral and `(d x) y = N(d x)`.
    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (d, xs) = x.clear_denominators();
        let (cof, norm) = norm_cofactor(&xs, &BigInt::from(self.reduction));
        let (norm, cof) = if norm.is_negative() {
            (-norm, cof.into_iter().map(|v| -v).collect())
        } else {
            (norm, cof)
        };
        let scaled: Vec<BigInt> = cof.into_iter().map(|v| v * &d).collect();
        Ok(FieldElement::from_scaled(scaled, &norm))
    }

    pub fn div(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    pub fn pow(&self, x: &FieldElement, k: i64) -> Result<FieldElement> {
        let base = if k < 0 { self.inv(x)? } else { x.clone() };
        let mut e = k.unsigned_abs();
        let mut b = base;
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        Ok(r)
    }

    /// Multiplication-by-`x` matrix on `Z^n` for an integer coordinate vector.
    fn mult_matrix(&self, x: &[BigInt]) -> Vec<Vec<BigInt>> {
        let n = self.degree;
        let c = BigInt::from(self.reduction);
        // column j is x * theta^j
        let mut cols = Vec::with_capacity(n);
        let mut cur = x.to_vec();
        for _ in 0..n {
            cols.push(cur.clone());
            // multiply by theta: shift up, wrap with factor c
            let top = cur.pop().unwrap();
            cur.insert(0, &top * &c);
        }
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect()
    }

    /// Norm of an element of `Z[theta]`, by repeated halving of the degree.
    pub(crate) fn norm_int(&self, x: &[BigInt]) -> BigInt {
        norm_cofactor(x, &BigInt::from(self.reduction)).1
    }

    /// `N(x) mod p` for an element of `Z[theta]` and a prime `p < 2^63`.
    pub(crate) fn norm_int_mod(&self, x: &[BigInt], p: u64) -> u64 {
        let modulus = BigInt::from(p);
        let reduce = |v: &BigInt| -> u64 {
            let r = v % &modulus;
            let r = if r.is_negative() { r + &modulus } else { r };
            r.try_into().expect("reduced below p")
        };
        let matrix: Vec<Vec<u64>> = self
            .mult_matrix(x)
            .iter()
            .map(|row| row.iter().map(reduce).collect())
            .collect();
        lattice::det_mod(matrix, p)
    }

    pub fn norm(&self, x: &FieldElement) -> BigRational {
        let (d, ints) = x.clear_denominators();
        let n = self.norm_int(&ints);
        BigRational::new(n, num_traits::pow(d, self.degree))
    }

    pub fn trace(&self, x: &FieldElement) -> BigRational {
        // trace of theta^i is 0 for 0 < i < n in both families
        &x.0[0] * rat(self.degree as i64)
    }

    /// Coordinates with respect to the integral basis: `(1, omega)` for
    /// quadratic fields, the power basis for cyclotomic fields.
    pub fn integral_coords(&self, x: &FieldElement) -> Vec<BigRational> {
        if self.kind == FieldKind::Quadratic && self.parameter.rem_euclid(4) == 1 {
            // a + b sqrt(m) = (a - b) + 2b omega, omega = (1 + sqrt(m)) / 2
            vec![&x.0[0] - &x.0[1], &x.0[1] * rat(2)]
        } else {
            x.0.clone()
        }
    }

    /// Inverse of [`integral_coords`](Self::integral_coords).
    pub fn from_integral_coords(&self, c: &[BigInt]) -> FieldElement {
        if self.kind == FieldKind::Quadratic && self.parameter.rem_euclid(4) == 1 {
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            let v = BigRational::from_integer(c[1].clone()) * &half;
            FieldElement(vec![BigRational::from_integer(c[0].clone()) + &v, v])
        } else {
            FieldElement(c.iter().cloned().map(BigRational::from_integer).collect())
        }
    }

    /// The element `omega` of the integral basis `(1, omega)` of a quadratic field.
    pub fn omega(&self) -> FieldElement {
        let mut c = vec![BigInt::zero(); self.degree];
        c[1] = BigInt::one();
        self.from_integral_coords(&c)
    }

    pub fn is_integral(&self, x: &FieldElement) -> bool {
        self.integral_coords(x).iter().all(|q| q.is_integer())
    }

    /// Whether `x` is a root of unity (finite multiplicative order).
    pub fn is_root_of_unity(&self, x: &FieldElement) -> bool {
        let order = match self.kind {
            FieldKind::Quadratic => match self.parameter {
                -1 => 4,
                -3 => 6,
                _ => 2,
            },
            FieldKind::Cyclotomic2 => 2 * self.degree as i64,
        };
        !x.is_zero() && self.pow(x, order).map(|y| y.is_one()).unwrap_or(false)
    }

    pub fn fmt_element(&self, x: &FieldElement) -> String {
        let sym = self.generator_symbol();
        let mut out = String::new();
        for (i, c) in x.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mon = match i {
                0 => String::new(),
                1 => sym.clone(),
                _ => format!("{sym}^{i}"),
            };
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mon);
            } else {
                out.push_str(&format!("{mag}*{mon}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Discriminant of the integral basis via the trace form, det(Tr(b_i b_j)).
    fn trace_form_discriminant(k: &NumberField) -> BigInt {
        let n = k.degree();
        let basis: Vec<FieldElement> = (0..n)
            .map(|i| {
                let mut c = vec![BigInt::zero(); n];
                c[i] = BigInt::one();
                k.from_integral_coords(&c)
            })
            .collect();
        let m: Vec<Vec<BigInt>> = basis
            .iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| k.trace(&k.mul(a, b)).to_integer())
                    .collect()
            })
            .collect();
        lattice::det(&m)
    }

    #[test]
    fn norm_and_inverse_match_matrix_oracle() {
        let fields = [NumberField::quadratic(-7).unwrap(), NumberField::quadratic(13).unwrap()]
            .into_iter()
            .chain((2..=5).map(|k| NumberField::cyclotomic2(k).unwrap()));
        for k in fields {
            for seed in 1..6i64 {
                let ints: Vec<BigInt> = (0..k.degree() as i64)
                    .map(|i| BigInt::from((seed * 7 + i * i * 3) % 11 - 5))
                    .collect();
                let det = crate::arith::lattice::det(&k.mult_matrix(&ints));
                assert_eq!(k.norm_int(&ints), det, "{}", k.name());
                let x = k.from_integral_coords(&ints).scale(&q(2, 3 + seed));
                if !x.is_zero() {
                    assert!(k.mul(&x, &k.inv(&x).unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn make_field_examples() {
        let k = NumberField::quadratic(-5).unwrap();
        assert_eq!(k.degree(), 2);
        assert_eq!(k.signature(), (0, 1));
        assert_eq!(k.discriminant(), &BigInt::from(-20));
        let k = NumberField::cyclotomic2(4).unwrap();
        assert_eq!(k.degree(), 8);
        assert_eq!(k.signature(), (0, 4));
        assert!(matches!(NumberField::quadratic(12), Err(Error::UnsupportedField(_))));
        assert!(matches!(NumberField::quadratic(1), Err(Error::UnsupportedField(_))));
        assert!(matches!(NumberField::cyclotomic2(6), Err(Error::UnsupportedField(_))));
        assert!(matches!(NumberField::cyclotomic2(1), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn discriminant_matches_trace_form() {
        for m in [-1, -2, -3, -5, -7, -15, 2, 3, 5, 13, 21] {
            let k = NumberField::quadratic(m).unwrap();
            assert_eq!(&trace_form_discriminant(&k), k.discriminant(), "m = {m}");
        }
        for kk in 2..=5 {
            let k = NumberField::cyclotomic2(kk).unwrap();
            assert_eq!(&trace_form_discriminant(&k), k.discriminant(), "k = {kk}");
            let (r1, r2) = k.signature();
            assert_eq!(r1 + 2 * r2, k.degree());
        }
    }

    #[test]
    fn element_arithmetic_examples() {
        let k = NumberField::quadratic(-5).unwrap();
        let s = k.theta();
        assert_eq!(k.mul(&s, &s), k.from_int(-5));
        let x = k.element_from_ints(&[1, 1]);
        let inv = k.inv(&x).unwrap();
        assert_eq!(inv, k.element(vec![q(1, 6), q(-1, 6)]).unwrap());
        assert_eq!(k.inv(&k.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn norm_examples() {
        let k = NumberField::quadratic(-5).unwrap();
        assert_eq!(k.norm(&k.element_from_ints(&[1, 1])), rat(6));
        let z = NumberField::cyclotomic2(4).unwrap();
        // Phi_16(1) = 2
        let one_minus_zeta = &z.one() - &z.theta();
        assert_eq!(z.norm(&one_minus_zeta), rat(2));
        assert_eq!(z.norm(&z.from_int(2)), rat(256));
        assert_eq!(z.norm(&z.from_rational(q(1, 2))), q(1, 256));
    }

    #[test]
    fn integrality() {
        let k = NumberField::quadratic(-3).unwrap();
        assert!(k.is_integral(&k.element(vec![q(1, 2), q(1, 2)]).unwrap()));
        assert!(!k.is_integral(&k.element(vec![q(1, 2), q(0, 1)]).unwrap()));
        let gi = NumberField::quadratic(-1).unwrap();
        assert!(!gi.is_integral(&gi.from_rational(q(1, 2))));
        let z = NumberField::cyclotomic2(4).unwrap();
        assert!(z.is_integral(&z.theta()));
    }

    #[test]
    fn theta_powers_and_roots_of_unity() {
        let z = NumberField::cyclotomic2(4).unwrap();
        assert_eq!(z.theta_pow(8), z.from_int(-1));
        assert_eq!(z.theta_pow(16), z.one());
        assert_eq!(z.theta_pow(-1), z.inv(&z.theta()).unwrap());
        assert!(z.is_root_of_unity(&z.theta_pow(3)));
        assert!(!z.is_root_of_unity(&z.from_int(2)));
    }

    #[test]
    fn parse_and_format() {
        let k = NumberField::quadratic(-5).unwrap();
        let x = k.parse_element("1/2;-3").unwrap();
        assert_eq!(x, k.element(vec![q(1, 2), rat(-3)]).unwrap());
        assert_eq!(x.to_coord_string(), "1/2;-3");
        assert_eq!(k.fmt_element(&x), "1/2 - 3*sqrt(-5)");
        assert_eq!(k.parse_element("7").unwrap(), k.from_int(7));
        assert!(k.parse_element("1;2;3").is_err());
        assert!(k.parse_element("x").is_err());
    }
}
