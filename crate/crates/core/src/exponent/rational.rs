use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational, always reduced with a positive denominator.
///
/// Serializes as the string `"num/den"`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics on a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Panics on zero.
    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn pow(&self, k: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), k as usize))
    }

    pub fn max(self, other: Self) -> Self {
        std::cmp::max(self, other)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `n`, `n/d` and `-n/d`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("`{s}` is not a rational `num/den`"));
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let r: Rational = text.parse().map_err(serde::de::Error::custom)?;
        // only the reduced spelling is canonical
        if r.to_string() != text {
            return Err(serde::de::Error::custom(format!(
                "`{text}` is not in reduced `num/den` form"
            )));
        }
        Ok(r)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $f(self, rhs: Rational) -> Rational {
                Rational(self.0.$f(rhs.0))
            }
        }
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $f(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$f(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_display_and_parse() {
        assert_eq!(Rational::new(6, -8).to_string(), "-3/4");
        assert_eq!(Rational::integer(35).to_string(), "35/1");
        assert_eq!("35".parse::<Rational>().unwrap(), Rational::integer(35));
        assert_eq!(" 2/4 ".parse::<Rational>().unwrap(), Rational::new(1, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn serde_is_canonical() {
        let r = Rational::new(1, 1860);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, "\"1/1860\"");
        assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), r);
        assert!(serde_json::from_str::<Rational>("\"2/4\"").is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Rational::new(1, 4);
        let b = Rational::new(1, 6);
        assert_eq!(&a + &b, Rational::new(5, 12));
        assert_eq!(&a * &b, Rational::new(1, 24));
        assert_eq!(&a / &b, Rational::new(3, 2));
        assert_eq!(Rational::new(2, 3).pow(3), Rational::new(8, 27));
    }
}
