//! Faster evaluators of `F(n)` that must agree with [`crate::formula::f_literal`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use crate::counter::OpCounter;
use crate::error::{Error, Result};
use crate::formula;
use crate::nat::Nat;
use crate::oracle;

/// Largest `n` the windowed sieve will allocate a window for.
pub const MAX_WINDOW_N: u64 = 1 << 28;

/// Largest `n` handed to the trial-division oracle.
const MAX_ORACLE_N: u64 = 1 << 62;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub enum Strategy {
    /// Full double sum with P from the floor-difference divisor count.
    #[serde(rename = "literal")]
    LiteralFormula,
    /// Divisor counts for the whole window from one multiples sieve.
    #[serde(rename = "windowed")]
    #[default]
    WindowedSieve,
    /// Trial-division next prime; no formula involved.
    #[serde(rename = "oracle")]
    OracleDirect,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [
        Strategy::LiteralFormula,
        Strategy::WindowedSieve,
        Strategy::OracleDirect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::LiteralFormula => "literal",
            Strategy::WindowedSieve => "windowed",
            Strategy::OracleDirect => "oracle",
        }
    }

    pub fn evaluate(self, n: &Nat, counter: &mut OpCounter) -> Result<Nat> {
        match self {
            Strategy::LiteralFormula => formula::f_literal_with(n, counter),
            Strategy::WindowedSieve => f_windowed(n.try_u64()?, counter).map(Nat::from),
            Strategy::OracleDirect => {
                let n = n.try_u64()?;
                if n > MAX_ORACLE_N {
                    return Err(Error::TooLarge(n.to_string()));
                }
                Ok(Nat::from(oracle::next_prime_oracle(n)))
            }
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                Error::Usage(format!(
                    "unknown strategy '{s}' (expected literal, windowed or oracle)"
                ))
            })
    }
}

/// Divisor counts for every integer in `(n, 2n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    lo: u64,
    hi: u64,
    dcounts: Vec<u64>,
}

impl Window {
    /// First index, `n + 1`.
    pub fn lo(&self) -> u64 {
        self.lo
    }

    /// Last index, `2n`.
    pub fn hi(&self) -> u64 {
        self.hi
    }

    /// Counts in index order, `dcounts()[k]` belongs to `lo + k`.
    pub fn dcounts(&self) -> &[u64] {
        &self.dcounts
    }

    pub fn dcount(&self, i: u64) -> Option<u64> {
        if i < self.lo || i > self.hi {
            return None;
        }
        Some(self.dcounts[(i - self.lo) as usize])
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (self.lo..=self.hi).zip(self.dcounts.iter().copied())
    }
}

/// For every `j` in `[1, 2n]`, adds one to each multiple of `j` in `(n, 2n]`.
pub fn window_divisor_counts(n: u64, counter: &mut OpCounter) -> Result<Window> {
    if n == 0 {
        return Err(Error::domain("window_divisor_counts", "requires n >= 1"));
    }
    if n > MAX_WINDOW_N {
        return Err(Error::TooLarge(n.to_string()));
    }
    let lo = n + 1;
    let hi = 2 * n;
    let mut dcounts = vec![0u64; n as usize];
    for j in 1..=hi {
        let first = (n / j + 1) * j;
        let mut m = first;
        while m <= hi {
            dcounts[(m - lo) as usize] += 1;
            counter.mark();
            m += j;
        }
    }
    Ok(Window { lo, hi, dcounts })
}

/// First prime in `(n, 2n]`, located by scanning the window's divisor counts.
pub fn f_windowed(n: u64, counter: &mut OpCounter) -> Result<u64> {
    let window = window_divisor_counts(n, counter)?;
    for (i, d) in window.iter() {
        counter.p_eval();
        // d = 2 means prime (P = 0); d > 2 means composite (P = 1)
        if d == 2 {
            return Ok(i);
        }
    }
    Err(Error::NoPrimeInWindow { n })
}

/// The sum of products, stopping at the first `m` whose product is zero.
///
/// The running product is extended by one literal `P(m)` per step, so each
/// `P(i)` is evaluated once.
pub fn f_shortcircuit(n: &Nat, counter: &mut OpCounter) -> Result<Nat> {
    if n.is_zero() {
        return Err(Error::domain("f_shortcircuit", "requires n >= 1"));
    }
    let n = n.as_biguint();
    let hi = n * 2u32;
    let mut m = n + 1u32;
    let mut sum = num_bigint::BigUint::from(0u32);
    while m <= hi {
        let p = formula::p_literal_with(&Nat::from(m.clone()), counter)?;
        if !p.is_one() {
            break;
        }
        sum += 1u32;
        m += 1u32;
    }
    Ok(Nat::from(n + 1u32 + sum))
}

/// Floor-pair evaluations [`f_shortcircuit`] performs: `sum_{i=n+1}^{q} i`
/// where `q` is the next prime after `n`.
pub fn predicted_literal_cost(n: u64) -> u64 {
    let q = oracle::next_prime_oracle(n);
    (n + 1..=q).sum()
}

/// Marks [`window_divisor_counts`] makes: `sum_{j=1}^{2n} (floor(2n/j) - floor(n/j))`.
pub fn predicted_window_marks(n: u64) -> u64 {
    (1..=2 * n).map(|j| 2 * n / j - n / j).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategy_names_round_trip() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
        assert!(matches!("sieve".parse::<Strategy>(), Err(Error::Usage(_))));
        assert_eq!(Strategy::default(), Strategy::WindowedSieve);
    }

    #[test]
    fn window_examples() {
        let w = window_divisor_counts(5, &mut OpCounter::new()).unwrap();
        assert_eq!((w.lo(), w.hi()), (6, 10));
        assert_eq!(w.dcounts(), &[4, 2, 4, 3, 4]);

        let w = window_divisor_counts(1, &mut OpCounter::new()).unwrap();
        assert_eq!((w.lo(), w.hi()), (2, 2));
        assert_eq!(w.dcounts(), &[2]);

        let w = window_divisor_counts(3, &mut OpCounter::new()).unwrap();
        assert_eq!(w.dcounts(), &[3, 2, 4]);
        assert_eq!(w.dcount(6), Some(4));
        assert_eq!(w.dcount(3), None);
        assert_eq!(w.dcount(7), None);

        assert!(window_divisor_counts(0, &mut OpCounter::new()).is_err());
    }

    #[test]
    fn f_windowed_examples() {
        let f = |n| f_windowed(n, &mut OpCounter::new()).unwrap();
        assert_eq!(f(5), 7);
        assert_eq!(f(1), 2);
        assert_eq!(f(100), 101);
        assert!(f_windowed(0, &mut OpCounter::new()).is_err());
    }

    #[test]
    fn f_windowed_counts_scanned_p() {
        let mut c = OpCounter::new();
        assert_eq!(f_windowed(7, &mut c).unwrap(), 11);
        assert_eq!(c.p_evals, 4);
        assert_eq!(c.floor_pair_evals, 0);
    }

    #[test]
    fn f_shortcircuit_examples() {
        let f = |n: u64| f_shortcircuit(&Nat::from(n), &mut OpCounter::new()).unwrap();
        assert_eq!(f(2), 3);
        assert_eq!(f(23), 29);
        assert_eq!(f(1), 2);
        assert!(f_shortcircuit(&Nat::zero(), &mut OpCounter::new()).is_err());
    }

    #[test]
    fn predicted_cost_examples() {
        assert_eq!(predicted_literal_cost(1), 2);
        assert_eq!(predicted_literal_cost(5), 13);
        assert_eq!(predicted_literal_cost(7), 38);
    }

    #[test]
    fn predicted_marks_small() {
        // n = 1: j = 1 marks 2, j = 2 marks 2
        assert_eq!(predicted_window_marks(1), 2);
        let mut c = OpCounter::new();
        window_divisor_counts(5, &mut c).unwrap();
        // total of the divisor counts of 6..=10
        assert_eq!(c.multiple_marks, 4 + 2 + 4 + 3 + 4);
        assert_eq!(predicted_window_marks(5), 17);
    }

    #[test]
    fn no_prime_error_is_distinct() {
        let e = Error::NoPrimeInWindow { n: 10 };
        assert!(e.to_string().contains("(10, 20]"));
    }
}
