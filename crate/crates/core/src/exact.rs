//! Exact integer number theory: prime tables, primorials, `omega`,
//! truncated divisor counts and integer square roots.
//!
//! Everything here is exact; the [`crate::interval`] module handles all
//! approximate quantities. Factorisation is trial division against a prime
//! table that covers every input the rest of the crate produces (values up
//! to ~1e14); anything larger is refused rather than silently mis-factored.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Guard on `primes_up_to`; only small prefixes are ever needed.
pub const MAX_PRIME_COUNT: usize = 10_000;

/// Trial-division factor base covers integers below this bound.
pub const FACTOR_LIMIT: u64 = 100_000_000_000_000; // 1e14

fn sieve_primes(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Primes up to 1e7 (enough to factor anything below [`FACTOR_LIMIT`]).
fn factor_base() -> &'static [u64] {
    static BASE: OnceLock<Vec<u64>> = OnceLock::new();
    BASE.get_or_init(|| sieve_primes(10_000_000))
}

/// All primes strictly below `limit` (fresh vector, for sieve roots).
pub fn primes_below(limit: u64) -> Vec<u64> {
    sieve_primes(limit.saturating_sub(1))
}

/// Smallest-prime-factor table for `0..=limit` (`spf[0] = spf[1] = 0`).
pub fn sieve_spf(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            let mut j = i;
            while j <= limit {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

fn small_primes() -> &'static [u64] {
    static SMALL: OnceLock<Vec<u64>> = OnceLock::new();
    // p_10000 = 104729; sieve a little past it.
    SMALL.get_or_init(|| sieve_primes(110_000))
}

/// The first `k` primes, ascending.
pub fn primes_up_to(k: usize) -> Result<Vec<u64>> {
    if k == 0 {
        return Err(Error::EmptyRequest("asked for zero primes".into()));
    }
    if k > MAX_PRIME_COUNT {
        return Err(Error::Refused(format!(
            "prime prefix limited to {MAX_PRIME_COUNT}, asked for {k}"
        )));
    }
    Ok(small_primes()[..k].to_vec())
}

/// `i`-th prime, 1-based (`nth_prime(1) == 2`). Panics beyond the table.
pub fn nth_prime(i: usize) -> u64 {
    small_primes()[i - 1]
}

/// Product of the first `k` primes; `primorial(0) == 1`.
pub fn primorial(k: usize) -> BigUint {
    let mut acc = BigUint::one();
    if k == 0 {
        return acc;
    }
    for &p in &small_primes()[..k] {
        acc *= BigUint::from(p);
    }
    acc
}

/// Factor a `u64` into `(prime, exponent)` pairs, ascending.
pub fn factor_u64(n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::Domain("cannot factor 0".into()));
    }
    if n >= FACTOR_LIMIT {
        return Err(Error::Refused(format!(
            "will not factor {n} blind (limit {FACTOR_LIMIT})"
        )));
    }
    let mut rest = n;
    let mut out = Vec::new();
    for &p in factor_base() {
        if p * p > rest {
            break;
        }
        if rest.is_multiple_of(p) {
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    if rest > 1 {
        // rest has no factor <= 1e7 and rest < 1e14, so it is prime
        out.push((rest, 1));
    }
    Ok(out)
}

/// Number of distinct prime factors; `omega(1) == 0`.
pub fn omega(n: &BigUint) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::Domain("omega(0) is undefined".into()));
    }
    let v = n
        .to_u64()
        .ok_or_else(|| Error::Refused(format!("will not factor {n} blind")))?;
    Ok(factor_u64(v)?.len() as u32)
}

fn count_divisors_rec(factors: &[(u64, u32)], idx: usize, acc: u128, h: u128) -> u64 {
    if idx == factors.len() {
        return 1;
    }
    let (p, e) = factors[idx];
    let mut total = 0;
    let mut v = acc;
    for i in 0..=e {
        if v > h {
            break;
        }
        total += count_divisors_rec(factors, idx + 1, v, h);
        if i < e {
            match v.checked_mul(p as u128) {
                Some(next) => v = next,
                None => break,
            }
        }
    }
    total
}

/// `d_H(n)`: the number of divisors of `n` that do not exceed `H`.
pub fn count_divisors_upto(n: &BigUint, h: &BigUint) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::Domain("d_H(0) is undefined".into()));
    }
    let nv = n
        .to_u64()
        .ok_or_else(|| Error::Refused(format!("will not factor {n} blind")))?;
    let hv = h.to_u128().unwrap_or(u128::MAX);
    let factors = factor_u64(nv)?;
    Ok(count_divisors_rec(&factors, 0, 1, hv))
}

/// Same as [`count_divisors_upto`] but from a prepared factorisation.
pub fn count_divisors_upto_factored(factors: &[(u64, u32)], h: u128) -> u64 {
    count_divisors_rec(factors, 0, 1, h)
}

/// Exact floor of the square root.
pub fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

pub fn is_perfect_square(n: &BigUint) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

/// `u64` fast path used by the search loops.
pub fn is_square_u64(n: u64) -> bool {
    let r = n.sqrt();
    r * r == n
}

pub fn is_square_u128(n: u128) -> bool {
    let r = n.sqrt();
    r * r == n
}
