//! Integer lattice helpers: Hermite normal form and fraction-free determinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row-style Hermite normal form of the lattice spanned by `rows` (all of
/// length `n`). Row `i` of the result starts at column `i` with positive pivots and
/// off-pivot entries reduced into `[0, pivot)`. Requires full rank.
pub fn hnf(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut out = Vec::with_capacity(n);
    for col in 0..n {
        // gcd-combine every remaining row into a single pivot row for `col`
        let mut pivot: Option<Vec<BigInt>> = None;
        let mut rest = Vec::new();
        for row in m.drain(..) {
            if row[col].is_zero() {
                rest.push(row);
                continue;
            }
            match pivot.take() {
                None => pivot = Some(row),
                Some(p) => {
                    let (a, b) = (&p[col], &row[col]);
                    let egcd = a.extended_gcd(b);
                    let (g, x, y) = (egcd.gcd, egcd.x, egcd.y);
                    let (ua, ub) = (a / &g, b / &g);
                    let combined: Vec<BigInt> =
                        p.iter().zip(&row).map(|(pi, ri)| &x * pi + &y * ri).collect();
                    let killed: Vec<BigInt> =
                        p.iter().zip(&row).map(|(pi, ri)| &ub * pi - &ua * ri).collect();
                    debug_assert!(killed[col].is_zero());
                    rest.push(killed);
                    pivot = Some(combined);
                }
            }
        }
        let mut p = pivot.expect("lattice is not of full rank");
        if p[col].is_negative() {
            p.iter_mut().for_each(|c| *c = -&*c);
        }
        out.push(p);
        m = rest;
    }
    // reduce entries above the pivots
    for col in 0..n {
        let (upper, lower) = out.split_at_mut(col);
        let pivot_row = &lower[0];
        for row in upper.iter_mut() {
            let q = row[col].div_floor(&pivot_row[col]);
            if !q.is_zero() {
                for (c, pc) in row.iter_mut().zip(pivot_row) {
                    *c -= &q * pc;
                }
            }
        }
    }
    out
}

/// Product of the HNF pivots, i.e. the index of the lattice in `Z^n`.
pub fn index(basis: &[Vec<BigInt>]) -> BigInt {
    basis.iter().enumerate().map(|(i, r)| r[i].clone()).product()
}

/// Determinant of a square integer matrix (Bareiss fraction-free elimination).
pub fn det(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a = matrix.to_vec();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime: a^(p-2)
    let (mut base, mut e, mut r) = (a, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    r
}

/// Determinant modulo a prime `p < 2^63` by Gaussian elimination.
pub fn det_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            m.swap(piv, col);
            det = (p - det) % p;
        }
        det = mul_mod(det, m[col][col], p);
        let inv = inv_mod(m[col][col], p);
        for r in col + 1..n {
            if m[r][col] == 0 {
                continue;
            }
            let factor = mul_mod(m[r][col], inv, p);
            for c in col..n {
                let sub = mul_mod(factor, m[col][c], p);
                m[r][c] = (m[r][c] + p - sub) % p;
            }
        }
    }
    det
}
