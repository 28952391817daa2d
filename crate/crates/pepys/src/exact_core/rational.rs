//! Arbitrary-precision rationals in canonical form, and probabilities.
//!
//! Every value is stored reduced to lowest terms with a positive denominator,
//! so equal values are structurally (bit-)identical and `Eq`/`Ord`/`Hash` are
//! exact. Nothing in this module touches floating point except the explicit
//! `to_f64` conversions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number: arbitrary-precision, always in lowest terms,
/// denominator always positive, zero stored as `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Builds `numerator / denominator`, reduced and sign-normalized.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let den = denominator.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self(BigRational::new(numerator.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
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

    /// The value as a `BigInt`, truncated toward zero.
    pub fn to_integer(&self) -> BigInt {
        self.0.to_integer()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    /// Exact integer power. `gcd(a, b) = 1` implies `gcd(a^e, b^e) = 1`, so
    /// the result is built raw without re-reducing.
    pub fn pow(&self, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Self(BigRational::new_raw(
            self.0.numer().pow(exp),
            self.0.denom().pow(exp),
        ))
    }

    /// Nearest `f64`. Only for rendering and float-valued approximations;
    /// never feeds back into exact computations.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Fixed-point decimal rendering with exactly `digits` fractional digits,
    /// rounded half-to-even on the exact value. No intermediate floating
    /// point. `digits` must be at least 1.
    pub fn render_decimal(&self, digits: u32) -> String {
        assert!(digits >= 1, "render_decimal requires digits >= 1");
        let ten_pow = BigUint::from(10u32).pow(digits);
        let num = self.0.numer().magnitude() * &ten_pow;
        let den = self.0.denom().magnitude();
        let (mut quot, rem) = num.div_rem(den);
        // Half-even on the discarded remainder. Rounding the magnitude is
        // correct for negatives too: ties-to-even is an odd function.
        let twice = &rem * 2u32;
        match twice.cmp(den) {
            Ordering::Greater => quot += 1u32,
            Ordering::Equal => {
                if quot.is_odd() {
                    quot += 1u32;
                }
            }
            Ordering::Less => {}
        }
        let int_part = &quot / &ten_pow;
        let frac_part = &quot % &ten_pow;
        let sign = if self.0.is_negative() && !quot.is_zero() {
            "-"
        } else {
            ""
        };
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part,
            width = digits as usize
        )
    }
}

impl fmt::Display for ExactRational {
    /// `"a/b"` in lowest terms, or a bare integer when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Accepts `"a/b"` (reduced or not) or a bare integer, with optional sign.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::InvalidRational(text.to_string()));
        }
        match trimmed.split_once('/') {
            Some((num, den)) => {
                let numerator = BigInt::from_str(num.trim())
                    .map_err(|_| Error::InvalidRational(text.to_string()))?;
                let denominator = BigInt::from_str(den.trim())
                    .map_err(|_| Error::InvalidRational(text.to_string()))?;
                if denominator.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Ok(Self(BigRational::new(numerator, denominator)))
            }
            None => {
                let n = BigInt::from_str(trimmed)
                    .map_err(|_| Error::InvalidRational(text.to_string()))?;
                Ok(Self::from_integer(n))
            }
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational((self.0).$method(rhs.0))
            }
        }
        impl std::ops::$trait<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((self.0).$method(&rhs.0))
            }
        }
        impl std::ops::$trait<ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(rhs.0))
            }
        }
        impl std::ops::$trait<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl std::ops::Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl std::ops::Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

/// An exact probability: an [`ExactRational`] constrained to `[0, 1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Probability(ExactRational);

impl Probability {
    pub fn new(value: ExactRational) -> Result<Self> {
        if value.is_negative() || value > ExactRational::one() {
            return Err(Error::ProbabilityOutOfRange(value));
        }
        Ok(Self(value))
    }

    pub fn from_ratio(
        numerator: impl Into<BigInt>,
        denominator: impl Into<BigInt>,
    ) -> Result<Self> {
        Self::new(ExactRational::new(numerator, denominator)?)
    }

    pub fn zero() -> Self {
        Self(ExactRational::zero())
    }

    pub fn one() -> Self {
        Self(ExactRational::one())
    }

    pub fn value(&self) -> &ExactRational {
        &self.0
    }

    pub fn into_value(self) -> ExactRational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0 == ExactRational::one()
    }

    /// Exact `1 - p`.
    pub fn complement(&self) -> Self {
        Self(ExactRational::one() - &self.0)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn render_decimal(&self, digits: u32) -> String {
        self.0.render_decimal(digits)
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Probability {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        Self::new(ExactRational::from_str(text)?)
    }
}

impl Serialize for Probability {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}
