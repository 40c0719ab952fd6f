//! Literal evaluation of the next-prime recurrence
//!
//! ```text
//! F(n) = n + 1 + sum_{m=n+1}^{2n} prod_{i=n+1}^{m} P(i)
//! P(i) = -floor(-(d(i) - 2) / i)                         i >= 2
//! d(i) = sum_{j=1}^{i} (floor(i/j) - floor((i-1)/j))     i >= 1
//! ```
//!
//! Every quantity is an unbounded integer and every floor rounds toward
//! negative infinity. The negated fraction inside P is exactly where
//! truncating division would go wrong: for composite i it would give 0
//! instead of 1.
//!
//! Formula to code:
//!
//! | term                              | function                  |
//! |-----------------------------------|---------------------------|
//! | `floor(x / y)`                    | [`floor_div`]             |
//! | `floor(i/j) - floor((i-1)/j)`     | [`floor_div_delta`]       |
//! | `d(i)`                            | [`divisor_count_literal`] |
//! | `-floor(-(d - 2) / i)`            | [`p_from_divisor_count`]  |
//! | `P(i)`                            | [`p_literal`]             |
//! | `F(n)`                            | [`f_literal`]             |
//!
//! P carries a leading minus on the outer floor. Without it composite i
//! would map to -1 and the product over (n, m] would no longer be a 0/1
//! indicator of "no prime yet".

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::counter::OpCounter;
use crate::error::{Error, Result};
use crate::nat::{Indicator, Nat};
use crate::strategies::Strategy;

/// Greatest integer `q` with `q <= numer / denom`.
pub fn floor_div(numer: &BigInt, denom: &BigInt) -> Result<BigInt> {
    if !denom.is_positive() {
        return Err(Error::domain(
            "floor_div",
            format!("denominator must be positive, got {denom}"),
        ));
    }
    Ok(numer.div_floor(denom))
}

/// `floor(i/j) - floor((i-1)/j)`: 1 when `j` divides `i`, else 0.
pub fn floor_div_delta(i: &Nat, j: &Nat) -> Result<Indicator> {
    if i.is_zero() {
        return Err(Error::domain("floor_div_delta", "requires i >= 1"));
    }
    if j.is_zero() || j > i {
        return Err(Error::domain(
            "floor_div_delta",
            format!("requires 1 <= j <= i, got i={i} j={j}"),
        ));
    }
    let i = i.to_bigint();
    let j = j.to_bigint();
    floor_pair(&i, &j, &mut OpCounter::new())
}

fn floor_pair(i: &BigInt, j: &BigInt, counter: &mut OpCounter) -> Result<Indicator> {
    counter.floor_pair();
    let upper = floor_div(i, j)?;
    let lower = floor_div(&(i - 1), j)?;
    Indicator::try_from(upper - lower)
}

/// Number of divisors of `i`, as the sum of `i` floor-difference terms.
pub fn divisor_count_literal(i: &Nat) -> Result<Nat> {
    divisor_count_literal_with(i, &mut OpCounter::new())
}

/// [`divisor_count_literal`], counting one `floor_pair_evals` per term.
pub fn divisor_count_literal_with(i: &Nat, counter: &mut OpCounter) -> Result<Nat> {
    if i.is_zero() {
        return Err(Error::domain("divisor_count_literal", "requires i >= 1"));
    }
    let i = i.to_bigint();
    let mut total = BigUint::zero();
    let mut j = BigInt::one();
    while j <= i {
        if floor_pair(&i, &j, counter)?.is_one() {
            total += 1u32;
        }
        j += 1;
    }
    Ok(Nat::from(total))
}

/// `-floor(-(d - 2) / i)` for a known divisor count `d` of `i`.
pub fn p_from_divisor_count(i: &Nat, d: &Nat) -> Result<Indicator> {
    if i.as_biguint() < &BigUint::from(2u32) {
        return Err(Error::domain(
            "p_from_divisor_count",
            format!("defined only for integers i >= 2, got {i}"),
        ));
    }
    let numer: BigInt = -(d.to_bigint() - BigInt::from(2));
    let q = floor_div(&numer, &i.to_bigint())?;
    Indicator::try_from(-q)
}

/// Prime indicator: 0 when `i` is prime, 1 when composite. Defined for `i >= 2`.
pub fn p_literal(i: &Nat) -> Result<Indicator> {
    p_literal_with(i, &mut OpCounter::new())
}

pub fn p_literal_with(i: &Nat, counter: &mut OpCounter) -> Result<Indicator> {
    if i.as_biguint() < &BigUint::from(2u32) {
        return Err(Error::domain(
            "p_literal",
            format!("the prime function is defined only for integers i >= 2, got {i}"),
        ));
    }
    let d = divisor_count_literal_with(i, counter)?;
    counter.p_eval();
    p_from_divisor_count(i, &d)
}

/// `F(n)` evaluated as the full double sum of products, no early exit.
///
/// Each `P(i)` for `i` in `(n, 2n]` is computed once with [`p_literal`];
/// every inner product is then rebuilt from scratch for each `m`.
pub fn f_literal(n: &Nat) -> Result<Nat> {
    f_literal_with(n, &mut OpCounter::new())
}

pub fn f_literal_with(n: &Nat, counter: &mut OpCounter) -> Result<Nat> {
    if n.is_zero() {
        return Err(Error::domain(
            "f_literal",
            "requires n >= 1 (P(1) is undefined)",
        ));
    }
    let lo = n.as_biguint() + 1u32;
    let hi = n.as_biguint() * 2u32;

    let mut factors = Vec::new();
    let mut i = lo.clone();
    while i <= hi {
        factors.push(BigUint::from(
            p_literal_with(&Nat::from(i.clone()), counter)?.value(),
        ));
        i += 1u32;
    }

    let mut sum = BigUint::zero();
    for m in 0..factors.len() {
        let product = factors[..=m].iter().fold(BigUint::one(), |acc, p| acc * p);
        sum += product;
    }
    Ok(Nat::from(lo + sum))
}

/// `F(n)` by the chosen strategy.
pub fn next_prime(n: &Nat, strategy: Strategy) -> Result<Nat> {
    next_prime_with(n, strategy, &mut OpCounter::new())
}

pub fn next_prime_with(n: &Nat, strategy: Strategy, counter: &mut OpCounter) -> Result<Nat> {
    if n.is_zero() {
        return Err(Error::domain("next_prime", "requires n >= 1"));
    }
    strategy.evaluate(n, counter)
}

/// `[2, F(2), F(F(2)), ...]` with `count` elements.
pub fn prime_sequence(count: usize, strategy: Strategy) -> Result<Vec<Nat>> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    let mut p = Nat::from(2u64);
    out.push(p.clone());
    while out.len() < count {
        p = next_prime(&p, strategy)?;
        out.push(p.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    fn fd(a: i64, b: i64) -> Result<BigInt> {
        floor_div(&BigInt::from(a), &BigInt::from(b))
    }

    #[test]
    fn floor_div_examples() {
        assert_eq!(fd(7, 3).unwrap(), BigInt::from(2));
        assert_eq!(fd(-1, 5).unwrap(), BigInt::from(-1));
        assert_eq!(fd(0, 9).unwrap(), BigInt::from(0));
        assert_eq!(fd(-6, 3).unwrap(), BigInt::from(-2));
    }

    #[test]
    fn floor_div_rejects_nonpositive_denominator() {
        assert!(matches!(fd(1, 0), Err(Error::Domain { .. })));
        assert!(fd(1, -3).is_err());
    }

    #[test]
    fn floor_div_delta_examples() {
        assert_eq!(floor_div_delta(&n(6), &n(3)).unwrap(), Indicator::ONE);
        assert_eq!(floor_div_delta(&n(6), &n(4)).unwrap(), Indicator::ZERO);
        assert_eq!(floor_div_delta(&n(1), &n(1)).unwrap(), Indicator::ONE);
    }

    #[test]
    fn floor_div_delta_domain() {
        assert!(floor_div_delta(&n(0), &n(0)).is_err());
        assert!(floor_div_delta(&n(5), &n(0)).is_err());
        assert!(floor_div_delta(&n(5), &n(6)).is_err());
    }

    #[test]
    fn divisor_count_examples() {
        assert_eq!(divisor_count_literal(&n(1)).unwrap(), 1);
        assert_eq!(divisor_count_literal(&n(7)).unwrap(), 2);
        assert_eq!(divisor_count_literal(&n(12)).unwrap(), 6);
        assert!(divisor_count_literal(&n(0)).is_err());
    }

    #[test]
    fn divisor_count_counts_floor_pairs() {
        let mut c = OpCounter::new();
        divisor_count_literal_with(&n(12), &mut c).unwrap();
        assert_eq!(c.floor_pair_evals, 12);
    }

    #[test]
    fn p_literal_examples() {
        assert_eq!(p_literal(&n(5)).unwrap(), Indicator::ZERO);
        assert_eq!(p_literal(&n(9)).unwrap(), Indicator::ONE);
        assert_eq!(p_literal(&n(2)).unwrap(), Indicator::ZERO);
        assert_eq!(p_literal(&n(4)).unwrap(), Indicator::ONE);
    }

    #[test]
    fn p_literal_domain() {
        assert!(p_literal(&n(0)).is_err());
        let err = p_literal(&n(1)).unwrap_err();
        assert!(err.to_string().contains("i >= 2"), "{err}");
    }

    #[test]
    fn truncating_division_would_break_p() {
        // For composite i, -(d - 2)/i lies in (-1, 0). Truncation gives 0
        // where the floor gives -1.
        let numer = BigInt::from(-(6 - 2));
        let denom = BigInt::from(12);
        assert_eq!(&numer / &denom, BigInt::zero());
        assert_eq!(floor_div(&numer, &denom).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn f_literal_examples() {
        assert_eq!(f_literal(&n(1)).unwrap(), 2);
        assert_eq!(f_literal(&n(2)).unwrap(), 3);
        assert_eq!(f_literal(&n(7)).unwrap(), 11);
        assert!(f_literal(&n(0)).is_err());
    }

    #[test]
    fn f_literal_counts_whole_window() {
        let mut c = OpCounter::new();
        f_literal_with(&n(7), &mut c).unwrap();
        assert_eq!(c.floor_pair_evals, (8..=14).sum::<u64>());
        assert_eq!(c.p_evals, 7);
        assert_eq!(c.multiple_marks, 0);
    }

    #[test]
    fn next_prime_examples() {
        assert_eq!(next_prime(&n(2), Strategy::LiteralFormula).unwrap(), 3);
        assert_eq!(next_prime(&n(13), Strategy::WindowedSieve).unwrap(), 17);
        assert_eq!(next_prime(&n(1), Strategy::OracleDirect).unwrap(), 2);
        for s in Strategy::ALL {
            assert!(next_prime(&n(0), s).is_err());
        }
    }

    #[test]
    fn prime_sequence_examples() {
        let seq = |c, s| -> Vec<u64> {
            prime_sequence(c, s)
                .unwrap()
                .iter()
                .map(|p| p.to_u64().unwrap())
                .collect()
        };
        assert_eq!(seq(1, Strategy::OracleDirect), vec![2]);
        assert_eq!(seq(5, Strategy::WindowedSieve), vec![2, 3, 5, 7, 11]);
        assert_eq!(
            seq(10, Strategy::LiteralFormula),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        );
        assert!(seq(0, Strategy::LiteralFormula).is_empty());
    }
}
