//! Ground-truth primality and divisor routines.
//!
//! Nothing here touches [`crate::formula`]; the equivalence tests compare
//! the two paths and would be meaningless otherwise.

use crate::error::{Error, Result};

/// `floor(sqrt(n))` by Newton iteration on integers.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = n;
    let mut y = x / 2 + (x & 1);
    while y < x {
        x = y;
        y = (x + n / x) / 2;
    }
    x
}

/// Trial division by every `d` in `[2, isqrt(i)]`.
pub fn is_prime_trial(i: u64) -> bool {
    if i < 2 {
        return false;
    }
    let bound = isqrt(i);
    (2..=bound).all(|d| !i.is_multiple_of(d))
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime_oracle(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime_trial(c) {
        c += 1;
    }
    c
}

/// Number of `d` in `[1, i]` dividing `i`, by direct enumeration.
pub fn divisor_count_enum(i: u64) -> Result<u64> {
    if i == 0 {
        return Err(Error::domain("divisor_count_enum", "requires i >= 1"));
    }
    Ok((1..=i).filter(|&d| i.is_multiple_of(d)).count() as u64)
}

/// Sieve of Eratosthenes over `0..=limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveTable {
    limit: u64,
    flags: Vec<bool>,
}

impl SieveTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn flags(&self) -> &[bool] {
        &self.flags
    }

    /// Whether `i` is prime. Panics if `i > limit`.
    pub fn is_prime(&self, i: u64) -> bool {
        self.flags[i as usize]
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.flags
            .iter()
            .enumerate()
            .filter(|(_, &p)| p)
            .map(|(i, _)| i as u64)
    }
}

pub fn build_sieve(limit: u64) -> Result<SieveTable> {
    if limit == 0 {
        return Err(Error::domain("build_sieve", "requires limit >= 1"));
    }
    let len = usize::try_from(limit)
        .ok()
        .and_then(|l| l.checked_add(1))
        .ok_or_else(|| Error::TooLarge(limit.to_string()))?;
    let mut flags = vec![true; len];
    flags[0] = false;
    flags[1] = false;
    let mut p = 2usize;
    while p * p < len {
        if flags[p] {
            for m in (p * p..len).step_by(p) {
                flags[m] = false;
            }
        }
        p += 1;
    }
    Ok(SieveTable { limit, flags })
}
