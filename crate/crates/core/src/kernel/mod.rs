//! Primitive types, the tolerance policy, and the low-level constructions
//! every other module builds on.
//!
//! The rational-closed operations here are generic over [`Scalar`] so the
//! same code runs on floats and on exact rationals. Only
//! [`line_circle_intersections`] needs a square root and is restricted to
//! [`Real`](crate::scalar::Real).

mod ops;
mod primitives;

pub use ops::*;
pub use primitives::{Circle, Line, Point};

use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::scalar::Scalar;

/// Scale-relative zero test: a quantity `q` with natural scale `S` counts as
/// zero iff `|q| <= max(abs_floor, rel_eps * S)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tolerance<S> {
    pub rel_eps: S,
    pub abs_floor: S,
}

impl<S: Scalar> Tolerance<S> {
    pub fn new(rel_eps: S, abs_floor: S) -> Result<Self> {
        if !(rel_eps > S::zero()) || !(abs_floor >= S::zero()) {
            return Err(GeometryError::InvalidTolerance);
        }
        Ok(Self { rel_eps, abs_floor })
    }

    /// Zero tolerance. Only meaningful for exact scalars.
    pub fn exact() -> Self {
        Self {
            rel_eps: S::zero(),
            abs_floor: S::zero(),
        }
    }

    pub fn threshold(&self, scale: &S) -> S {
        let rel = self.rel_eps.clone() * scale.abs_val();
        self.abs_floor.clone().max_of(rel)
    }

    pub fn is_zero(&self, q: &S, scale: &S) -> bool {
        q.abs_val() <= self.threshold(scale)
    }

    pub fn is_exact(&self) -> bool {
        self.rel_eps.is_zero() && self.abs_floor.is_zero()
    }
}

impl<S: Scalar> Default for Tolerance<S> {
    fn default() -> Self {
        S::default_tolerance()
    }
}
