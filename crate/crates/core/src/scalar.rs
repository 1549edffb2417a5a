//! Exact rational scalar used throughout the crate.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An arbitrary-precision rational number. Integers are the denominator-1 case.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar(BigRational::one())
    }

    pub fn from_int<T: Into<BigInt>>(value: T) -> Self {
        ExactScalar(BigRational::from_integer(value.into()))
    }

    /// `numer / denom`, reduced. Panics on a zero denominator.
    pub fn ratio<N: Into<BigInt>, D: Into<BigInt>>(numer: N, denom: D) -> Self {
        ExactScalar(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_rational(value: BigRational) -> Self {
        ExactScalar(value)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// The integer value, if the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|v| v.to_i64())
    }

    pub fn to_i128(&self) -> Option<i128> {
        self.to_integer().and_then(|v| v.to_i128())
    }

    /// Integer and even.
    pub fn is_even_integer(&self) -> bool {
        self.to_integer()
            .map(|v| (v % BigInt::from(2)).is_zero())
            .unwrap_or(false)
    }

    pub fn abs(&self) -> Self {
        ExactScalar(self.0.abs())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = ExactScalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        ExactScalar(self.0.recip())
    }

    /// Approximate value for display purposes only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{0}` as an exact rational")]
pub struct ParseScalarError(pub String);

impl FromStr for ExactScalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(ExactScalar::ratio(n, d))
            }
            None => s.parse::<BigInt>().map(ExactScalar::from_int).map_err(|_| err()),
        }
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for ExactScalar {
            fn from(v: $t) -> Self {
                ExactScalar::from_int(v)
            }
        }
    )*};
}
from_prim!(i32, i64, i128, u32, u64, usize);

impl From<BigInt> for ExactScalar {
    fn from(v: BigInt) -> Self {
        ExactScalar::from_int(v)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(&rhs.0))
            }
        }
        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(rhs.0))
            }
        }
        impl $trait<i64> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: i64) -> ExactScalar {
                self.$method(ExactScalar::from_int(rhs))
            }
        }
        impl $trait<i64> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: i64) -> ExactScalar {
                self.$method(ExactScalar::from_int(rhs))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-&self.0)
    }
}

impl PartialEq<i64> for ExactScalar {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

impl PartialOrd<i64> for ExactScalar {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

impl Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a ExactScalar> for ExactScalar {
    fn sum<I: Iterator<Item = &'a ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |a, b| a + b)
    }
}

impl Product for ExactScalar {
    fn product<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::one(), |a, b| a * b)
    }
}

/// Shorthand for an integer-valued scalar.
pub fn int(v: i64) -> ExactScalar {
    ExactScalar::from_int(v)
}

/// Shorthand for a reduced fraction.
pub fn frac(n: i64, d: i64) -> ExactScalar {
    ExactScalar::ratio(n, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrality_is_exact() {
        assert!(frac(6, 3).is_integer());
        assert!(!frac(5, 2).is_integer());
        assert_eq!(frac(6, 3), 2);
        assert!(frac(8, 2).is_even_integer());
        assert!(!frac(9, 3).is_even_integer());
        assert!(!frac(1, 2).is_even_integer());
    }

    #[test]
    fn parse_and_display() {
        let x: ExactScalar = "-10/4".parse().unwrap();
        assert_eq!(x.to_string(), "-5/2");
        assert_eq!("7".parse::<ExactScalar>().unwrap(), 7);
        assert!("1/0".parse::<ExactScalar>().is_err());
        assert!("abc".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = frac(1, 3);
        let b = frac(1, 6);
        assert_eq!(&a + &b, frac(1, 2));
        assert_eq!(&a * 3, 1);
        assert_eq!((&a - &b) / &b, 1);
        assert_eq!(frac(-2, 3).pow(3), frac(-8, 27));
    }
}
