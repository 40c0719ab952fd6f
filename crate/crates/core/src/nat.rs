//! Exact integer types shared by every evaluator.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, ParseBigIntError};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Unbounded nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Nat(BigUint);

impl Nat {
    pub fn zero() -> Self {
        Nat(BigUint::zero())
    }

    pub fn one() -> Self {
        Nat(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Converts to `u64`, reporting values that do not fit.
    pub fn try_u64(&self) -> Result<u64> {
        self.to_u64()
            .ok_or_else(|| Error::TooLarge(self.to_string()))
    }
}

impl From<u64> for Nat {
    fn from(v: u64) -> Self {
        Nat(BigUint::from(v))
    }
}

impl From<u32> for Nat {
    fn from(v: u32) -> Self {
        Nat(BigUint::from(v))
    }
}

impl From<BigUint> for Nat {
    fn from(v: BigUint) -> Self {
        Nat(v)
    }
}

impl TryFrom<BigInt> for Nat {
    type Error = Error;

    fn try_from(v: BigInt) -> Result<Self> {
        v.to_biguint()
            .map(Nat)
            .ok_or_else(|| Error::domain("Nat", format!("{v} is negative")))
    }
}

impl PartialEq<u64> for Nat {
    fn eq(&self, other: &u64) -> bool {
        self.to_u64() == Some(*other)
    }
}

impl FromStr for Nat {
    type Err = ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.parse::<BigUint>().map(Nat)
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// An integer that is either 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Indicator(bool);

impl Indicator {
    pub const ZERO: Indicator = Indicator(false);
    pub const ONE: Indicator = Indicator(true);

    pub fn value(self) -> u8 {
        self.0 as u8
    }

    pub fn is_one(self) -> bool {
        self.0
    }
}

impl From<bool> for Indicator {
    fn from(b: bool) -> Self {
        Indicator(b)
    }
}

impl TryFrom<BigInt> for Indicator {
    type Error = Error;

    fn try_from(v: BigInt) -> Result<Self> {
        if v.is_zero() {
            Ok(Indicator::ZERO)
        } else if v.is_one() {
            Ok(Indicator::ONE)
        } else {
            Err(Error::domain("Indicator", format!("{v} is not 0 or 1")))
        }
    }
}

impl TryFrom<i64> for Indicator {
    type Error = Error;

    fn try_from(v: i64) -> Result<Self> {
        Indicator::try_from(BigInt::from(v))
    }
}

impl fmt::Display for Indicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indicator_rejects_out_of_range() {
        assert_eq!(Indicator::try_from(0i64).unwrap(), Indicator::ZERO);
        assert_eq!(Indicator::try_from(1i64).unwrap(), Indicator::ONE);
        assert!(Indicator::try_from(-1i64).is_err());
        assert!(Indicator::try_from(2i64).is_err());
    }

    #[test]
    fn nat_rejects_negative() {
        assert!(Nat::try_from(BigInt::from(-3)).is_err());
        assert_eq!(Nat::try_from(BigInt::from(3)).unwrap(), 3u64);
    }

    #[test]
    fn nat_parses_beyond_u64() {
        let n: Nat = "340282366920938463463374607431768211457".parse().unwrap();
        assert!(n.to_u64().is_none());
        assert!(matches!(n.try_u64(), Err(Error::TooLarge(_))));
        assert!("-4".parse::<Nat>().is_err());
    }
}
