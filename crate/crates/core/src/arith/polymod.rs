//! Polynomials over `F_p` and `Z/p^N`: factorization of squarefree polynomials
//! mod an odd prime (distinct-degree followed by Cantor-Zassenhaus) and Hensel
//! lifting of a coprime factorization.
//!
//! Coefficient vectors are stored lowest degree first with no trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Poly = Vec<u64>;

fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    super::int::pow_mod(a, p - 2, p)
}

pub fn reduce(f: &[BigInt], p: u64) -> Poly {
    let pb = BigInt::from(p);
    trim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                u64::try_from(r).expect("residue fits in u64")
            })
            .collect(),
    )
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulm(x, y, p)) % p;
        }
    }
    trim(out)
}

fn divrem(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    if r.len() < b.len() {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0u64; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = mulm(r[i + db], lead_inv, p);
        q[i] = c;
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + p - mulm(c, bj, p)) % p;
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn monic(f: &[u64], p: u64) -> Poly {
    let inv = inv_mod(*f.last().unwrap(), p);
    f.iter().map(|&c| mulm(c, inv, p)).collect()
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b, p);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        monic(&a, p)
    }
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
fn xgcd(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = inv_mod(*r0.last().unwrap(), p);
    let scale = |f: &[u64]| trim(f.iter().map(|&c| mulm(c, inv, p)).collect());
    (scale(&r0), scale(&s0), scale(&t0))
}

fn powmod(base: &[u64], mut e: u128, modulus: &[u64], p: u64) -> Poly {
    let mut result = vec![1u64];
    let mut b = divrem(base, modulus, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = divrem(&mul(&result, &b, p), modulus, p).1;
        }
        b = divrem(&mul(&b, &b, p), modulus, p).1;
        e >>= 1;
    }
    result
}

/// Monic irreducible factors of a squarefree polynomial over `F_p`, `p` odd,
/// sorted by coefficient vector read from the leading term down.
pub fn factor_squarefree(f: &[u64], p: u64) -> Vec<Poly> {
    assert!(p > 2, "Cantor-Zassenhaus splitting needs an odd prime");
    let f = monic(&trim(f.to_vec()), p);
    let mut factors = Vec::new();
    // distinct-degree split
    let x = vec![0u64, 1];
    let mut rest = f;
    let mut h = x.clone();
    let mut d = 1usize;
    while rest.len() > 1 {
        if 2 * d > rest.len() - 1 {
            factors.extend(equal_degree(&rest, rest.len() - 1, p));
            break;
        }
        h = powmod(&h, p as u128, &rest, p);
        let g = gcd(&rest, &sub(&h, &x, p), p);
        if g.len() > 1 {
            factors.extend(equal_degree(&g, d, p));
            rest = divrem(&rest, &g, p).0;
            h = divrem(&h, &rest, p).1;
        }
        d += 1;
    }
    factors.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    factors
}

fn equal_degree(f: &[u64], d: usize, p: u64) -> Vec<Poly> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.to_vec()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (p << 8) ^ n as u64);
    let exp = (u128::from(p).pow(d as u32) - 1) / 2;
    loop {
        let a: Poly = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = sub(&powmod(&a, exp, f, p), &[1], p);
        let g = gcd(f, &b, p);
        if g.len() > 1 && g.len() < f.len() {
            let other = divrem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p);
            out.extend(equal_degree(&monic(&other, p), d, p));
            return out;
        }
    }
}

fn zmul(a: &[BigInt], b: &[BigInt], modulus: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out.iter().map(|c| c.mod_floor(modulus)).collect()
}

/// Remainder of `a` modulo a monic `g`, coefficients reduced mod `modulus`.
pub fn zrem_monic(a: &[BigInt], g: &[BigInt], modulus: &BigInt) -> Vec<BigInt> {
    let dg = g.len() - 1;
    let mut r: Vec<BigInt> = a.iter().map(|c| c.mod_floor(modulus)).collect();
    while r.len() > dg {
        let c = r.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        let shift = r.len() - dg;
        for (j, gj) in g.iter().take(dg).enumerate() {
            r[shift + j] = (&r[shift + j] - &c * gj).mod_floor(modulus);
        }
    }
    r
}

fn lift_u(f: &[u64]) -> Vec<BigInt> {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

/// Given monic `big_f` over Z and a monic factor `g` of `big_f mod p` coprime
/// to its cofactor, return the monic `G` with `G ≡ g (mod p)` dividing
/// `big_f` modulo `p^prec`.
pub fn hensel_lift(big_f: &[BigInt], g: &[u64], p: u64, prec: u32) -> Vec<BigInt> {
    let fp = reduce(big_f, p);
    let (h, r) = divrem(&fp, g, p);
    assert!(r.is_empty(), "g does not divide f mod p");
    let (one, _s, t) = xgcd(g, &h, p);
    assert_eq!(one, vec![1], "factors are not coprime mod p");
    let pb = BigInt::from(p);
    let mut big_g = lift_u(g);
    let mut big_h = lift_u(&h);
    let mut pk = pb.clone();
    for _ in 1..prec {
        let next = &pk * &pb;
        let prod = zmul(&big_g, &big_h, &next);
        let n = big_f.len().max(prod.len());
        // e = (F - GH) / p^k mod p
        let e: Vec<BigInt> = (0..n)
            .map(|i| {
                let fi = big_f.get(i).cloned().unwrap_or_default();
                let gi = prod.get(i).cloned().unwrap_or_default();
                (fi - gi).mod_floor(&next) / &pk
            })
            .collect();
        let e = reduce(&e, p);
        // s*g + t*h = 1  =>  e = (e*s + q*h) g + r h with e*t = q g + r
        let (_, dg) = divrem(&mul(&e, &t, p), g, p);
        let dh = divrem(&sub(&e, &mul(&dg, &h, p), p), g, p).0;
        for (i, c) in dg.iter().enumerate() {
            big_g[i] = (&big_g[i] + &pk * c).mod_floor(&next);
        }
        for (i, c) in dh.iter().enumerate() {
            if i < big_h.len() {
                big_h[i] = (&big_h[i] + &pk * c).mod_floor(&next);
            }
        }
        pk = next;
    }
    big_g
}

/// Whether `a` vanishes modulo `p^prec` (all coefficients divisible).
pub fn min_valuation(a: &[BigInt], p: u64) -> Option<u32> {
    a.iter()
        .filter(|c| !c.is_zero())
        .map(|c| super::int::val_int(c, p))
        .min()
}

pub fn pow_big(p: u64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), e as usize)
}
