use std::ops::{Add, Mul, Sub};

use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use crate::error::{GeometryError, Result};
use crate::scalar::Scalar;

/// Serializes as `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Serialize> Serialize for Point<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.x)?;
        t.serialize_element(&self.y)?;
        t.end()
    }
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Self { x, y }
    }

    pub fn origin() -> Self {
        Self::new(S::zero(), S::zero())
    }

    pub fn dot(&self, other: &Self) -> S {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    /// z-component of the 2D cross product.
    pub fn cross(&self, other: &Self) -> S {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }

    pub fn norm_sq(&self) -> S {
        self.dot(self)
    }

    pub fn dist_sq(&self, other: &Self) -> S {
        (self.clone() - other.clone()).norm_sq()
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        (self.clone() + other.clone()) * S::half()
    }

    /// Rotation by +90 degrees.
    pub fn perp(&self) -> Self {
        Self::new(-self.y.clone(), self.x.clone())
    }

    /// Weighted combination `sum(w_i * p_i) / sum(w_i)`; `None` when the
    /// weights sum to zero.
    pub fn affine_combination(points: &[Self], weights: &[S]) -> Option<Self> {
        debug_assert_eq!(points.len(), weights.len());
        let total = weights.iter().cloned().fold(S::zero(), |acc, w| acc + w);
        if total.is_zero() {
            return None;
        }
        let sum = points
            .iter()
            .zip(weights)
            .fold(Self::origin(), |acc, (p, w)| acc + p.clone() * w.clone());
        Some(sum * (S::one() / total))
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> Point<T> {
        Point {
            x: f(&self.x),
            y: f(&self.y),
        }
    }
}

impl<S: crate::scalar::Real> Point<S> {
    pub fn dist(&self, other: &Self) -> S {
        self.dist_sq(other).sqrt()
    }

    pub fn norm(&self) -> S {
        self.norm_sq().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl<S: Scalar> Add for Point<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<S: Scalar> Sub for Point<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<S: Scalar> Mul<S> for Point<S> {
    type Output = Self;
    fn mul(self, k: S) -> Self {
        Self::new(self.x * k.clone(), self.y * k)
    }
}

impl<S> From<(S, S)> for Point<S> {
    fn from((x, y): (S, S)) -> Self {
        Point { x, y }
    }
}

/// Line `u*x + v*y + w = 0`, kept in canonical form: `(u, v)` at canonical
/// scale (unit length for floats) and `u > 0`, or `u = 0` and `v > 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Line<S> {
    pub u: S,
    pub v: S,
    pub w: S,
}

impl<S: Scalar> Line<S> {
    /// Canonicalizes the coefficients. Fails when `u = v = 0`.
    pub fn new(u: S, v: S, w: S) -> Result<Self> {
        if u.is_zero() && v.is_zero() {
            return Err(GeometryError::DegenerateInput);
        }
        let mut k = S::line_scale(&u, &v);
        if u < S::zero() || (u.is_zero() && v < S::zero()) {
            k = -k;
        }
        Ok(Self {
            u: u * k.clone(),
            v: v * k.clone(),
            w: w * k,
        })
    }

    /// Signed value of the implicit equation at `p`. For float lines this is
    /// the signed distance.
    pub fn eval(&self, p: &Point<S>) -> S {
        self.u.clone() * p.x.clone() + self.v.clone() * p.y.clone() + self.w.clone()
    }

    pub fn normal(&self) -> Point<S> {
        Point::new(self.u.clone(), self.v.clone())
    }

    pub fn direction(&self) -> Point<S> {
        self.normal().perp()
    }

    /// The line through `p` perpendicular to this one.
    pub fn perpendicular_through(&self, p: &Point<S>) -> Self {
        let d = self.direction();
        let w = -d.dot(p);
        Self::new(d.x, d.y, w).expect("direction of a valid line is nonzero")
    }

    /// The line through `p` parallel to this one.
    pub fn parallel_through(&self, p: &Point<S>) -> Self {
        let w = -self.normal().dot(p);
        Self::new(self.u.clone(), self.v.clone(), w).expect("normal of a valid line is nonzero")
    }
}

/// Circle stored as center and squared radius, so that it is exact over the
/// rationals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Circle<S> {
    pub center: Point<S>,
    pub r_sq: S,
}

impl<S: Scalar> Circle<S> {
    pub fn new(center: Point<S>, r_sq: S) -> Self {
        debug_assert!(r_sq >= S::zero());
        Self { center, r_sq }
    }
}

impl<S: crate::scalar::Real> Circle<S> {
    pub fn from_radius(center: Point<S>, r: S) -> Self {
        Self::new(center, r * r)
    }

    pub fn radius(&self) -> S {
        self.r_sq.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_sign() {
        let l = Line::new(-3.0f64, -4.0, 12.0).unwrap();
        assert!((l.u - 0.6).abs() < 1e-15);
        assert!((l.v - 0.8).abs() < 1e-15);
        assert!((l.w + 2.4).abs() < 1e-15);
        let l = Line::new(0.0, -2.0, 1.0).unwrap();
        assert_eq!((l.u, l.v, l.w), (0.0, 1.0, -0.5));
    }

    #[test]
    fn zero_normal_rejected() {
        assert_eq!(Line::new(0.0, 0.0, 1.0), Err(GeometryError::DegenerateInput));
    }

    #[test]
    fn affine_combination_with_zero_weight_sum() {
        let pts = [Point::new(0.0, 0.0), Point::new(1.0, 0.0)];
        assert!(Point::affine_combination(&pts, &[1.0, -1.0]).is_none());
        let m = Point::affine_combination(&pts, &[1.0, 3.0]).unwrap();
        assert_eq!(m, Point::new(0.75, 0.0));
    }
}
