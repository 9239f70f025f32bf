//! Exact rational scalars used for encodings, rectangle geometry, and
//! branch coefficients.
//!
//! Everything upstream of rendering and grid densities is computed in
//! arbitrary-precision rationals so that expanding branches (λ > 1) cannot
//! amplify rounding error. Values serialize as `"num/den"` strings.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
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

    /// `num / den`; panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `base^exp` for a positive integer base and any integer exponent.
    pub fn int_pow(base: u32, exp: i32) -> Self {
        assert!(base > 0, "int_pow base must be positive");
        let b = BigInt::from(base);
        let p = b.pow(exp.unsigned_abs());
        if exp >= 0 {
            Rat(BigRational::from_integer(p))
        } else {
            Rat(BigRational::new(BigInt::one(), p))
        }
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

    pub fn recip(&self) -> Self {
        Rat(self.0.recip())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Nearest `f64`; exact whenever the denominator is a power of two
    /// within range.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("rational out of f64 range")
    }

    /// Integer value if the denominator is 1 and it fits in `i64`.
    pub fn to_integer(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Error parsing a `"num/den"` string.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {literal:?}: {reason}")]
pub struct ParseRatError {
    pub literal: String,
    pub reason: String,
}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `"num/den"` or a bare integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseRatError {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
        let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Rat(BigRational::new(num, den)))
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
        s.parse().map_err(de::Error::custom)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_round_trip() {
        for r in [
            Rat::zero(),
            Rat::one(),
            Rat::ratio(-1, 16),
            Rat::ratio(3, 4),
            Rat::from_int(128),
        ] {
            let s = r.to_string();
            assert_eq!(s.parse::<Rat>().unwrap(), r);
        }
        assert_eq!("3/4".parse::<Rat>().unwrap(), Rat::ratio(3, 4));
        assert_eq!("-2".parse::<Rat>().unwrap(), Rat::from_int(-2));
        assert_eq!("6/8".parse::<Rat>().unwrap(), Rat::ratio(3, 4));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn int_pow_signs() {
        assert_eq!(Rat::int_pow(4, -2), Rat::ratio(1, 16));
        assert_eq!(Rat::int_pow(4, 0), Rat::one());
        assert_eq!(Rat::int_pow(2, 3), Rat::from_int(8));
    }

    #[test]
    fn serde_as_string() {
        let r = Rat::ratio(-1, 16);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, "\"-1/16\"");
        let back: Rat = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
