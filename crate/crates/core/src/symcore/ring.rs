use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::util::fmt_rational;

/// An exact commutative coefficient ring that contains the rationals.
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: &BigRational) -> Self;

    fn scale(&self, q: &BigRational) -> Self {
        self.clone() * Self::from_rational(q)
    }

    /// JSON form used by the serializers.
    fn to_json(&self) -> serde_json::Value;

    /// Human-readable form used by text output and witnesses.
    fn render(&self) -> String;
}

impl Coeff for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn scale(&self, q: &BigRational) -> Self {
        self * q
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(fmt_rational(self))
    }

    fn render(&self) -> String {
        crate::util::fmt_rational_short(self)
    }
}
