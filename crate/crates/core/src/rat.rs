//! Arbitrary-precision rational numbers.
//!
//! `Rat` is the carrier for every valuation value in the workbench. All
//! value groups in scope live inside the rationals, so valuations never
//! touch floating point. The type wraps [`num::BigRational`] and is always
//! reduced, with a positive denominator.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational number, reduced, denominator > 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// Build `n/d`. Panics if `d == 0`; callers construct from literals.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "rational with zero denominator");
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn min(a: &Rat, b: &Rat) -> Rat {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn max(a: &Rat, b: &Rat) -> Rat {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Multiply by an integer scalar.
    pub fn scale(&self, k: i64) -> Rat {
        Rat(&self.0 * BigRational::from_integer(BigInt::from(k)))
    }

    /// Divide by a positive integer.
    pub fn div_int(&self, k: u64) -> Rat {
        assert!(k != 0);
        Rat(&self.0 / BigRational::from_integer(BigInt::from(k)))
    }

    /// Floor of the rational as a BigInt.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn cmp_rat(a: &Rat, b: &Rat) -> Ordering {
        a.cmp(b)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // BigRational prints "a/b", or just "a" when the denominator is 1.
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r = BigRational::from_str(s.trim()).map_err(|e| format!("bad rational {s:?}: {e}"))?;
        Ok(Rat(r))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Rat::from_str(&s).map_err(de::Error::custom)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division of Rat by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        (&self).div(&rhs)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

/// A rational extended with a top element.
///
/// Used for normalized-distance bounds, where an element already in the
/// target subfield has unbounded distance. `Infinite` sorts above every
/// finite rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value")]
pub enum ExtRat {
    #[serde(rename = "finite")]
    Finite(Rat),
    #[serde(rename = "infinite")]
    Infinite,
}

impl ExtRat {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtRat::Finite(r) => Some(r),
            ExtRat::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRat::Infinite)
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRat::Infinite, ExtRat::Infinite) => Ordering::Equal,
            (ExtRat::Infinite, ExtRat::Finite(_)) => Ordering::Greater,
            (ExtRat::Finite(_), ExtRat::Infinite) => Ordering::Less,
            (ExtRat::Finite(a), ExtRat::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(r) => write!(f, "{r}"),
            ExtRat::Infinite => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_reduces() {
        let a = Rat::new(1, 2);
        let b = Rat::new(1, 3);
        assert_eq!(&a + &b, Rat::new(5, 6));
    }

    #[test]
    fn min_respects_real_order() {
        let a = Rat::new(-1, 2);
        let b = Rat::new(-1, 8);
        assert_eq!(Rat::min(&a, &b), Rat::new(-1, 2));
    }

    #[test]
    fn scale_by_one() {
        let a = Rat::new(3, 8);
        assert_eq!(a.scale(1), Rat::new(3, 8));
    }

    #[test]
    fn display_roundtrip() {
        for s in ["5/6", "-1/2", "0", "7", "-13/100"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn extrat_sorts_infinite_on_top() {
        let vals = [
            ExtRat::Finite(Rat::new(1, 2)),
            ExtRat::Infinite,
            ExtRat::Finite(Rat::from_int(1000)),
        ];
        let max = vals.iter().max().unwrap();
        assert!(max.is_infinite());
    }
}
