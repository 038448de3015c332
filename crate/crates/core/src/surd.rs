//! Exact scalars of the form sign * sqrt(radicand).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};

/// sign * sqrt(radicand) with radicand >= 0; the zero value is normalized
/// to sign = 0, radicand = 0. Perfect-square radicands reduce to integers
/// through [`SurdValue::as_integer`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdValue {
    sign: i8,
    radicand: BigInt,
}

impl SurdValue {
    pub fn new(sign: i8, radicand: BigInt) -> Result<Self> {
        if !(-1..=1).contains(&sign) {
            return Err(Error::Domain(format!("surd sign must be -1, 0 or 1, got {sign}")));
        }
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand(radicand.to_string()));
        }
        if radicand.is_zero() || sign == 0 {
            return Ok(Self::zero());
        }
        Ok(Self { sign, radicand })
    }

    pub fn zero() -> Self {
        Self {
            sign: 0,
            radicand: BigInt::zero(),
        }
    }

    /// Represents the integer v exactly as sign(v) * sqrt(v^2).
    pub fn from_integer(v: &BigInt) -> Self {
        if v.is_zero() {
            return Self::zero();
        }
        Self {
            sign: if v.is_negative() { -1 } else { 1 },
            radicand: v * v,
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    /// The square of the represented value.
    pub fn squared(&self) -> BigInt {
        self.radicand.clone()
    }

    /// The exact integer value when the radicand is a perfect square.
    pub fn as_integer(&self) -> Option<BigInt> {
        let root = self.radicand.sqrt();
        if &root * &root == self.radicand {
            Some(BigInt::from(self.sign) * root)
        } else {
            None
        }
    }

    /// Integer-string when reducible, `{sign, radicand}` otherwise.
    pub fn to_json(&self) -> serde_json::Value {
        match self.as_integer() {
            Some(v) => json!(v.to_string()),
            None => json!({
                "sign": self.sign,
                "radicand": self.radicand.to_string(),
            }),
        }
    }
}

impl fmt::Display for SurdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(v) => write!(f, "{v}"),
            None => {
                if self.sign < 0 {
                    write!(f, "-sqrt({})", self.radicand)
                } else {
                    write!(f, "sqrt({})", self.radicand)
                }
            }
        }
    }
}
