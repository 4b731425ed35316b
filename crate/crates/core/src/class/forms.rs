use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Positive definite binary quadratic form `A x^2 + B xy + C y^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl QuadForm {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        QuadForm {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// The principal form of discriminant `d`: `(1, 0, -d/4)` or `(1, 1, (1-d)/4)`.
    pub fn principal(d: &BigInt) -> Self {
        let b = if d.is_odd() { BigInt::one() } else { BigInt::zero() };
        let c = (&b * &b - d) / 4;
        QuadForm {
            a: BigInt::one(),
            b,
            c,
        }
    }

    /// `-A < B <= A`.
    fn is_normal(&self) -> bool {
        match self.b.magnitude().cmp(self.a.magnitude()) {
            Ordering::Less => true,
            Ordering::Equal => !self.b.is_negative(),
            Ordering::Greater => false,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.is_normal()
            && match self.a.cmp(&self.c) {
                Ordering::Less => true,
                Ordering::Equal => !self.b.is_negative(),
                Ordering::Greater => false,
            }
    }

    fn normalize(&mut self) {
        if self.is_normal() {
            return;
        }
        // choose r with -A < B + 2rA <= A
        let two_a = &self.a * 2;
        let r = (&self.a - &self.b).div_floor(&two_a);
        let c = &self.a * &r * &r + &self.b * &r + &self.c;
        self.b += &two_a * &r;
        self.c = c;
    }

    /// Gauss reduction to the unique reduced form in the proper equivalence class.
    pub fn reduce(mut self) -> Self {
        debug_assert!(self.a.is_positive() && self.discriminant().is_negative());
        self.normalize();
        while !self.is_reduced() {
            std::mem::swap(&mut self.a, &mut self.c);
            self.b = -&self.b;
            self.normalize();
        }
        self
    }
}

/// All primitive reduced forms of the negative discriminant `d`, sorted.
pub fn reduced_forms(d: i64) -> Vec<QuadForm> {
    assert!(d < 0 && d.rem_euclid(4) <= 1, "not a negative discriminant");
    let mut out = Vec::new();
    let mut a = 1i64;
    // reduced implies 3A^2 <= |d|
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            if (b - d).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            if a.gcd(&b).gcd(&c) != 1 {
                continue;
            }
            out.push(QuadForm::new(a, b, c));
        }
        a += 1;
    }
    out.sort();
    out
}
