//! Triangle-level constructions: side data, centers, derived triangles,
//! conjugate points and cevian feet.

mod centers;
mod conjugates;
mod derived;

pub use centers::{excircle, incircle, triangle_center, CenterKind};
pub use conjugates::{isogonal_cevian_foot, isogonal_conjugate, isotomic_conjugate, isotomic_point_on_side};
pub use derived::{
    cevian_feet, contact_triangle, extouch_triangle, medial_triangle, orthic_triangle, pedal_triangle,
};

use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::kernel::{circle_through, on_line, Circle, Line, Point, Tolerance};
use crate::scalar::Real;

/// Triangles with `2*area / max_side^2` below this are rejected.
pub const DEGENERACY_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn next(self) -> Vertex {
        Self::ALL[(self.index() + 1) % 3]
    }

    pub fn prev(self) -> Vertex {
        Self::ALL[(self.index() + 2) % 3]
    }

    pub fn opposite(self) -> Side {
        Side::ALL[self.index()]
    }
}

/// Side lines, named by their endpoints in cyclic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    BC,
    CA,
    AB,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::BC, Side::CA, Side::AB];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn opposite(self) -> Vertex {
        Vertex::ALL[self.index()]
    }

    /// `(start, end)` of the side: `BC -> (B, C)`, `CA -> (C, A)`, `AB -> (A, B)`.
    pub fn endpoints(self) -> (Vertex, Vertex) {
        let v = self.opposite();
        (v.next(), v.prev())
    }
}

/// Three points in vertex order. Implemented by everything that can play the
/// role of "the other triangle" in a relation.
pub trait VertexTriple<R> {
    fn triple(&self) -> [Point<R>; 3];
}

impl<R: Real> VertexTriple<R> for [Point<R>; 3] {
    fn triple(&self) -> [Point<R>; 3] {
        *self
    }
}

/// One point on each side line: `fa` on BC, `fb` on CA, `fc` on AB.
/// Feet may lie outside the closed segments.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CevianFeet<R> {
    pub fa: Point<R>,
    pub fb: Point<R>,
    pub fc: Point<R>,
}

impl<R: Real> CevianFeet<R> {
    pub fn new(fa: Point<R>, fb: Point<R>, fc: Point<R>) -> Self {
        Self { fa, fb, fc }
    }

    pub fn from_array([fa, fb, fc]: [Point<R>; 3]) -> Self {
        Self { fa, fb, fc }
    }

    pub fn on(&self, side: Side) -> Point<R> {
        match side {
            Side::BC => self.fa,
            Side::CA => self.fb,
            Side::AB => self.fc,
        }
    }

    pub fn as_array(&self) -> [Point<R>; 3] {
        [self.fa, self.fb, self.fc]
    }

    pub fn map(&self, mut f: impl FnMut(Side, Point<R>) -> Point<R>) -> Self {
        Self::new(f(Side::BC, self.fa), f(Side::CA, self.fb), f(Side::AB, self.fc))
    }

    /// Whether every foot lies on its side line of `t`.
    pub fn on_carriers(&self, t: &Triangle<R>, tol: &Tolerance<R>) -> bool {
        Side::ALL
            .iter()
            .all(|&s| on_line(&self.on(s), &t.side_line(s), &t.scale_sq(), tol))
    }
}

impl<R: Real> VertexTriple<R> for CevianFeet<R> {
    fn triple(&self) -> [Point<R>; 3] {
        self.as_array()
    }
}

/// A non-degenerate triangle with cached side lengths `a = |BC|`,
/// `b = |CA|`, `c = |AB|` and semiperimeter `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Triangle<R> {
    vertices: [Point<R>; 3],
    sides: [R; 3],
    s: R,
}

impl<R: Real> Triangle<R> {
    pub fn new(a: Point<R>, b: Point<R>, c: Point<R>) -> Result<Self> {
        Self::with_threshold(a, b, c, R::lit(DEGENERACY_THRESHOLD))
    }

    pub fn with_threshold(a: Point<R>, b: Point<R>, c: Point<R>, threshold: R) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeometryError::DegenerateInput);
        }
        let ratio = area_ratio(&a, &b, &c);
        if !(ratio >= threshold) {
            return Err(GeometryError::DegenerateTriangle {
                ratio: ratio.to_f64().unwrap_or(f64::NAN),
                threshold: threshold.to_f64().unwrap_or(f64::NAN),
            });
        }
        let sides = [b.dist(&c), c.dist(&a), a.dist(&b)];
        let s = (sides[0] + sides[1] + sides[2]) * R::half();
        Ok(Self {
            vertices: [a, b, c],
            sides,
            s,
        })
    }

    pub fn vertex(&self, v: Vertex) -> Point<R> {
        self.vertices[v.index()]
    }

    pub fn vertices(&self) -> [Point<R>; 3] {
        self.vertices
    }

    /// Length of the side opposite `v`.
    pub fn side_len(&self, v: Vertex) -> R {
        self.sides[v.index()]
    }

    pub fn a(&self) -> R {
        self.sides[0]
    }

    pub fn b(&self) -> R {
        self.sides[1]
    }

    pub fn c(&self) -> R {
        self.sides[2]
    }

    /// Semiperimeter.
    pub fn s(&self) -> R {
        self.s
    }

    pub fn signed_area(&self) -> R {
        let [a, b, c] = self.vertices;
        (b - a).cross(&(c - a)) * R::half()
    }

    pub fn area(&self) -> R {
        self.signed_area().abs()
    }

    pub fn max_side(&self) -> R {
        self.sides[0].max(self.sides[1]).max(self.sides[2])
    }

    /// Natural squared-length scale for zero tests.
    pub fn scale_sq(&self) -> R {
        let m = self.max_side();
        m * m
    }

    pub fn area_ratio(&self) -> R {
        let [a, b, c] = self.vertices;
        area_ratio(&a, &b, &c)
    }

    pub fn side_endpoints(&self, side: Side) -> (Point<R>, Point<R>) {
        let (p, q) = side.endpoints();
        (self.vertex(p), self.vertex(q))
    }

    pub fn side_line(&self, side: Side) -> Line<R> {
        let (p, q) = self.side_endpoints(side);
        Line::new(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y).expect("sides of a valid triangle have distinct endpoints")
    }

    pub fn side_midpoint(&self, side: Side) -> Point<R> {
        let (p, q) = self.side_endpoints(side);
        p.midpoint(&q)
    }

    /// Interior angle at `v`, in radians.
    pub fn angle(&self, v: Vertex) -> R {
        let apex = self.vertex(v);
        let d1 = self.vertex(v.next()) - apex;
        let d2 = self.vertex(v.prev()) - apex;
        d1.cross(&d2).abs().atan2(d1.dot(&d2))
    }

    pub fn cosines(&self) -> [R; 3] {
        Vertex::ALL.map(|v| self.angle(v).cos())
    }

    /// All vertex-angle cosines exceed `margin`.
    pub fn is_acute_with(&self, margin: R) -> bool {
        self.cosines().iter().all(|&c| c > margin)
    }

    pub fn circumcircle(&self) -> Circle<R> {
        let [a, b, c] = self.vertices;
        circle_through(&a, &b, &c, &Tolerance::exact()).expect("valid triangle is not collinear")
    }

    /// Normalized barycentric coordinates of `p` (signed areas).
    pub fn barycentric(&self, p: &Point<R>) -> [R; 3] {
        let [a, b, c] = self.vertices;
        let total = (b - a).cross(&(c - a));
        [
            (b - *p).cross(&(c - *p)) / total,
            (c - *p).cross(&(a - *p)) / total,
            (a - *p).cross(&(b - *p)) / total,
        ]
    }

    /// Cartesian point of homogeneous barycentrics; `None` at infinity.
    pub fn from_barycentric(&self, w: [R; 3]) -> Option<Point<R>> {
        Point::affine_combination(&self.vertices, &w)
    }

    /// Whether all three barycentric coordinates exceed `margin`.
    pub fn contains_with_margin(&self, p: &Point<R>, margin: R) -> bool {
        self.barycentric(p).iter().all(|&w| w > margin)
    }
}

impl<R: Real> VertexTriple<R> for Triangle<R> {
    fn triple(&self) -> [Point<R>; 3] {
        self.vertices
    }
}

fn area_ratio<R: Real>(a: &Point<R>, b: &Point<R>, c: &Point<R>) -> R {
    let twice_area = (*b - *a).cross(&(*c - *a)).abs();
    let max_sq = a.dist_sq(b).max(b.dist_sq(c)).max(c.dist_sq(a));
    if max_sq == R::zero() {
        return R::zero();
    }
    twice_area / max_sq
}

/// Alias for [`Triangle::new`].
pub fn make_triangle<R: Real>(a: Point<R>, b: Point<R>, c: Point<R>) -> Result<Triangle<R>> {
    Triangle::new(a, b, c)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn p(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y)
    }

    pub fn t345() -> Triangle<f64> {
        Triangle::new(p(0., 0.), p(4., 0.), p(0., 3.)).unwrap()
    }

    pub fn tacu() -> Triangle<f64> {
        Triangle::new(p(0., 0.), p(4., 0.), p(1., 3.)).unwrap()
    }

    pub fn equilateral() -> Triangle<f64> {
        Triangle::new(p(0., 0.), p(2., 0.), p(1., 3f64.sqrt())).unwrap()
    }

    pub fn assert_close(a: Point<f64>, b: Point<f64>, eps: f64) {
        assert!(a.dist(&b) <= eps, "{a:?} vs {b:?} (eps {eps:e})");
    }
}
