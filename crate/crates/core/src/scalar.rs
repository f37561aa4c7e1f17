//! Scalar abstractions.
//!
//! The kernel only needs field operations and an ordering, so it is written
//! against [`Scalar`] and runs on `f32`, `f64` and exact [`BigRational`].
//! Everything that needs square roots or trigonometry (side lengths, in- and
//! excircles, angle formulas) is written against [`Real`].

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::kernel::Tolerance;

/// An ordered field usable by the geometry kernel.
pub trait Scalar:
    Clone + Debug + PartialOrd + Num + Neg<Output = Self> + FromPrimitive + ToPrimitive
{
    /// Positive factor that brings the normal `(u, v)` of a line to canonical
    /// scale. Floating types normalize to unit length; exact types, which
    /// cannot take square roots, scale the leading nonzero coefficient to 1.
    fn line_scale(u: &Self, v: &Self) -> Self;

    /// The tolerance used when the caller does not supply one.
    fn default_tolerance() -> Tolerance<Self>;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num).expect("integer fits scalar") / Self::from_i64(den).expect("integer fits scalar")
    }

    fn half() -> Self {
        Self::one() / (Self::one() + Self::one())
    }

    fn abs_val(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

/// A floating-point scalar: the kernel field plus `sqrt`, `sin`, `atan2`...
pub trait Real: Scalar + Float + Send + Sync {
    /// Lossless-enough conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("finite literal")
    }
}

impl Scalar for f64 {
    fn line_scale(u: &Self, v: &Self) -> Self {
        1.0 / u.hypot(*v)
    }

    fn default_tolerance() -> Tolerance<Self> {
        Tolerance {
            rel_eps: 1e-9,
            abs_floor: 1e-12,
        }
    }
}

impl Scalar for f32 {
    fn line_scale(u: &Self, v: &Self) -> Self {
        1.0 / u.hypot(*v)
    }

    fn default_tolerance() -> Tolerance<Self> {
        Tolerance {
            rel_eps: 1e-4,
            abs_floor: 1e-6,
        }
    }
}

impl Real for f64 {}
impl Real for f32 {}

impl Scalar for BigRational {
    fn line_scale(u: &Self, v: &Self) -> Self {
        let lead = if u.is_zero() { v } else { u };
        if lead.is_zero() {
            Self::one()
        } else {
            lead.abs().recip()
        }
    }

    /// Exact arithmetic compares against zero exactly.
    fn default_tolerance() -> Tolerance<Self> {
        Tolerance::exact()
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}
