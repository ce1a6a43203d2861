//! Elementary number theory on machine integers.
//!
//! Inputs in this crate are desk-scale (well below 10^6), so every value fits
//! a `u64` and modular products are formed in `u128`; nothing here can
//! overflow for representable inputs.

use crate::error::{Error, Result};
use num_integer::Integer;

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let cur = ds.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            ds.extend(cur.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("euler_phi(0) is undefined".into()));
    }
    let mut phi = n;
    for p in prime_divisors(n) {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// Largest `k` with `p^k | m`.
pub fn p_adic_val(p: u64, m: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("valuation of 0 is infinite".into()));
    }
    let mut k = 0;
    let mut m = m;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    Ok(k)
}

/// Residue of `r` modulo `m` in `0..m`, for any signed `r`.
pub fn residue(r: i64, m: u64) -> u64 {
    r.rem_euclid(m as i64) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `r` modulo `m`; `1` when `m = 1`.
pub fn mult_order(r: i64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    if m == 1 {
        return Ok(1);
    }
    let r = residue(r, m);
    if r.gcd(&m) != 1 {
        return Err(Error::InvalidArgument(format!(
            "gcd({r}, {m}) != 1, no multiplicative order"
        )));
    }
    let phi = euler_phi(m)?;
    // the order is the least divisor of phi(m) that works
    for d in divisors(phi) {
        if pow_mod(r, d, m) == 1 {
            return Ok(d);
        }
    }
    unreachable!("r^phi(m) = 1 for units r")
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Units modulo `m` in increasing order (`[0]` for `m = 1`).
pub fn units_mod(m: u64) -> Vec<u64> {
    if m == 1 {
        return vec![0];
    }
    (1..m).filter(|a| a.gcd(&m) == 1).collect()
}
