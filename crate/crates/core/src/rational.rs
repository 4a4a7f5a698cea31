//! Exact rational scalars.
//!
//! [`Q`] wraps an arbitrary-precision fraction that is always kept in lowest
//! terms with a positive denominator, so structural equality is numeric
//! equality.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Q(BigRational);

impl Q {
    pub fn zero() -> Self {
        Q(BigRational::zero())
    }

    pub fn one() -> Self {
        Q(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Q(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den`, normalizing sign and common factors.
    ///
    /// Panics when `den == 0`; use [`Q::from_str`] for fallible parsing.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Q(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn half() -> Self {
        Q::new(1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Result<Q, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Q(self.0.recip()))
    }

    /// `(-1)^k` as a rational.
    pub fn sign(k: i64) -> Q {
        if k.rem_euclid(2) == 0 {
            Q::one()
        } else {
            Q::from_int(-1)
        }
    }

    /// Canonical serialized spelling, always `num/den`.
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Q {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Q(BigRational::new(n, d)))
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_fraction_string())
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Self {
        Q::from_int(n)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&Q> for &Q {
            type Output = Q;
            fn $method(self, rhs: &Q) -> Q {
                Q(&self.0 $op &rhs.0)
            }
        }
        impl $tr<Q> for Q {
            type Output = Q;
            fn $method(self, rhs: Q) -> Q {
                Q(self.0 $op rhs.0)
            }
        }
        impl $tr<&Q> for Q {
            type Output = Q;
            fn $method(self, rhs: &Q) -> Q {
                Q(self.0 $op &rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div<&Q> for &Q {
    type Output = Q;
    fn div(self, rhs: &Q) -> Q {
        assert!(!rhs.is_zero(), "division by zero");
        Q(&self.0 / &rhs.0)
    }
}

impl AddAssign<&Q> for Q {
    fn add_assign(&mut self, rhs: &Q) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Q> for Q {
    fn sub_assign(&mut self, rhs: &Q) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Q> for Q {
    fn mul_assign(&mut self, rhs: &Q) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-self.0)
    }
}

impl Neg for &Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-&self.0)
    }
}

impl Sum for Q {
    fn sum<I: Iterator<Item = Q>>(iter: I) -> Q {
        iter.fold(Q::zero(), |acc, x| acc + x)
    }
}
