use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exponent of the prime `ell` in the nonzero integer `n`.
pub fn val_int(n: &BigInt, ell: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let ell = BigInt::from(ell);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&ell);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `ell`-adic valuation of a nonzero rational.
pub fn val_rat(q: &BigRational, ell: u64) -> i64 {
    val_int(q.numer(), ell) as i64 - val_int(q.denom(), ell) as i64
}

/// Strip every factor of `ell` from `n`.
pub fn strip(n: &BigInt, ell: u64) -> BigInt {
    let ell = BigInt::from(ell);
    let mut n = n.clone();
    while !n.is_zero() && (&n % &ell).is_zero() {
        n /= &ell;
    }
    n
}

pub fn is_squarefree(m: i64) -> bool {
    if m == 0 {
        return false;
    }
    let mut n = m.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn primes_up_to(bound: u64) -> impl Iterator<Item = u64> {
    (2..=bound).filter(|&n| is_prime(n))
}

/// Multiplicative order of `a` modulo `m` (requires gcd(a, m) = 1).
pub fn mult_order(a: u64, m: u64) -> u64 {
    let mut x = a % m;
    let mut k = 1;
    while x != 1 % m {
        x = mul_mod(x, a, m);
        k += 1;
    }
    k
}

/// Kronecker symbol (d / n) for n > 0.
pub fn kronecker(d: i64, n: u64) -> i32 {
    let mut n = n;
    let mut result = 1i32;
    while n % 2 == 0 {
        n /= 2;
        match d.rem_euclid(8) {
            0 | 2 | 4 | 6 => return 0,
            3 | 5 => result = -result,
            _ => {}
        }
    }
    // Jacobi symbol (d / n) for odd n
    let mut a = d.rem_euclid(n as i64) as u64;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Floor of the square root of a non-negative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    n.sqrt()
}

pub fn is_power_of_two(n: &BigInt) -> bool {
    let n = n.abs();
    !n.is_zero() && strip(&n, 2).is_one()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    qs.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn to_i64(n: &BigInt) -> Option<i64> {
    n.to_i64()
}
