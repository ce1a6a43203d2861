//! The infinite families (1)–(3) of CSP'-critical groups.

use crate::constructions::{cyclic_built, direct_product_built, named_built, semidirect_kernel_built};
use crate::error::{Error, Result};
use crate::numtheory::{gcd, is_prime, mult_order, p_adic_val, prime_divisors};
use crate::permgroup::FiniteGroup;

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{p} is not prime")))
    }
}

/// `C_q × (C_p ⋊_2 C_4)`: `3 ≠ p ≡ -1 (mod 4)`, `q > 2`, `q ≠ p`, `o_q(p)` odd.
pub fn family_predicate_1(q: u64, p: u64) -> Result<bool> {
    require_prime(q)?;
    require_prime(p)?;
    Ok(p != 3 && p % 4 == 3 && q > 2 && q != p && mult_order(p as i64, q)? % 2 == 1)
}

/// `C_p ⋊_k C_n` with the arithmetic conditions (a)–(c).
pub fn family_predicate_2(p: u64, n: u64, k: u64) -> Result<bool> {
    require_prime(p)?;
    if n == 0 || k == 0 || n % k != 0 {
        return Err(Error::InvalidArgument(format!("k = {k} must divide n = {n}")));
    }
    if n < 8 || p == 2 || n % p == 0 {
        return Ok(false);
    }
    if !prime_divisors(n).iter().all(|&q| (n / k) % q == 0) {
        return Ok(false);
    }
    let v2 = p_adic_val(2, n)?;
    let a = k == gcd(n, p - 1) && (n % 2 == 1 || p % 4 == 1) && (p != 5 || n == 8);
    let b = k == gcd(n, p - 1) && p % 4 == 3 && n != 4 && v2 == 2;
    let c = {
        let w = p_adic_val(2, p + 1)?;
        p != 3 && p % 4 == 3 && n == 1 << (w + 2) && k == 1 << (w + 1)
    };
    Ok(a || b || c)
}

/// `Q8 × C_p` with `p` odd and `o_p(2)` odd.
pub fn family_predicate_3(p: u64) -> Result<bool> {
    require_prime(p)?;
    Ok(p != 2 && mult_order(2, p)? % 2 == 1)
}

pub fn family_group_1(q: u64, p: u64) -> Result<FiniteGroup> {
    let c = cyclic_built(q as usize)?.rename(&[("a", "c")]);
    Ok(direct_product_built(&semidirect_kernel_built(p as usize, 4, 2)?, &c)?.group)
}

pub fn family_group_2(p: u64, n: u64, k: u64) -> Result<FiniteGroup> {
    Ok(semidirect_kernel_built(p as usize, n as usize, k as usize)?.group)
}

pub fn family_group_3(p: u64) -> Result<FiniteGroup> {
    let c = cyclic_built(p as usize)?.rename(&[("a", "c")]);
    Ok(direct_product_built(&named_built("Q8")?, &c)?.group)
}
