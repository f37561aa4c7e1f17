use serde::Serialize;

use super::{Circle, Line, Point, Tolerance};
use crate::error::{GeometryError, Result};
use crate::scalar::{Real, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

/// Outcome of intersecting two lines. Parallel lines meet at infinity, which
/// is a legitimate answer rather than an error. Serializes as `[x, y]` or
/// the string `"infinity"`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum LineIntersection<S> {
    Point(Point<S>),
    #[serde(serialize_with = "infinity")]
    AtInfinity,
}

fn infinity<Z: serde::Serializer>(z: Z) -> std::result::Result<Z::Ok, Z::Error> {
    z.serialize_str("infinity")
}

impl<S> LineIntersection<S> {
    pub fn point(self) -> Option<Point<S>> {
        match self {
            LineIntersection::Point(p) => Some(p),
            LineIntersection::AtInfinity => None,
        }
    }
}

/// Sign of the doubled signed area of `(p, q, r)`.
pub fn orientation<S: Scalar>(p: &Point<S>, q: &Point<S>, r: &Point<S>, tol: &Tolerance<S>) -> Orientation {
    let pq = q.clone() - p.clone();
    let pr = r.clone() - p.clone();
    let det = pq.cross(&pr);
    let scale = pq.norm_sq().max_of(pr.norm_sq());
    if tol.is_zero(&det, &scale) {
        Orientation::Collinear
    } else if det > S::zero() {
        Orientation::Ccw
    } else {
        Orientation::Cw
    }
}

pub fn line_through<S: Scalar>(p: &Point<S>, q: &Point<S>, tol: &Tolerance<S>) -> Result<Line<S>> {
    let scale = p.norm_sq().max_of(q.norm_sq());
    if tol.is_zero(&p.dist_sq(q), &scale) {
        return Err(GeometryError::DegenerateInput);
    }
    let u = p.y.clone() - q.y.clone();
    let v = q.x.clone() - p.x.clone();
    let w = -(u.clone() * p.x.clone() + v.clone() * p.y.clone());
    Line::new(u, v, w)
}

fn coeff_scale<S: Scalar>(l: &Line<S>) -> S {
    l.u.abs_val().max_of(l.v.abs_val())
}

pub fn intersect_lines<S: Scalar>(l1: &Line<S>, l2: &Line<S>, tol: &Tolerance<S>) -> Result<LineIntersection<S>> {
    let det = l1.u.clone() * l2.v.clone() - l2.u.clone() * l1.v.clone();
    let (s1, s2) = (coeff_scale(l1), coeff_scale(l2));
    if tol.is_zero(&det, &(s1.clone() * s2.clone())) {
        // Parallel. Coincident iff a point of l1 satisfies l2.
        let on_l1 = l1.normal() * (-l1.w.clone() / l1.normal().norm_sq());
        let residual = l2.eval(&on_l1);
        let length = (l1.w.abs_val() / s1).max_of(l2.w.abs_val() / s2.clone());
        if tol.is_zero(&residual, &(s2 * length)) {
            return Err(GeometryError::CoincidentLines);
        }
        return Ok(LineIntersection::AtInfinity);
    }
    let x = (l1.v.clone() * l2.w.clone() - l2.v.clone() * l1.w.clone()) / det.clone();
    let y = (l2.u.clone() * l1.w.clone() - l1.u.clone() * l2.w.clone()) / det;
    Ok(LineIntersection::Point(Point::new(x, y)))
}

/// Orthogonal projection of `p` onto `l`.
pub fn foot_of_perpendicular<S: Scalar>(p: &Point<S>, l: &Line<S>) -> Point<S> {
    let n = l.normal();
    let k = l.eval(p) / n.norm_sq();
    p.clone() - n * k
}

pub fn circle_through<S: Scalar>(p: &Point<S>, q: &Point<S>, r: &Point<S>, tol: &Tolerance<S>) -> Result<Circle<S>> {
    if orientation(p, q, r, tol) == Orientation::Collinear {
        return Err(GeometryError::CollinearPoints);
    }
    let b = q.clone() - p.clone();
    let c = r.clone() - p.clone();
    let d = (b.cross(&c)) * (S::one() + S::one());
    let (bb, cc) = (b.norm_sq(), c.norm_sq());
    let ux = (c.y.clone() * bb.clone() - b.y.clone() * cc.clone()) / d.clone();
    let uy = (b.x.clone() * cc - c.x.clone() * bb) / d;
    let offset = Point::new(ux, uy);
    let r_sq = offset.norm_sq();
    Ok(Circle::new(p.clone() + offset, r_sq))
}

/// Intersections of a line with a circle, ordered along the line direction.
/// A tangent line (discriminant zero at tolerance) yields the single touch
/// point.
pub fn line_circle_intersections<R: Real>(l: &Line<R>, c: &Circle<R>, tol: &Tolerance<R>) -> Vec<Point<R>> {
    let foot = foot_of_perpendicular(&c.center, l);
    let h_sq = c.r_sq - c.center.dist_sq(&foot);
    if tol.is_zero(&h_sq, &c.r_sq) {
        return vec![foot];
    }
    if h_sq < R::zero() {
        return Vec::new();
    }
    let dir = l.direction();
    let dir = dir * (h_sq.sqrt() / dir.norm());
    vec![foot - dir, foot + dir]
}

/// `|p - center|^2 - r^2`: positive outside, zero on, negative inside.
pub fn power_of_point<S: Scalar>(p: &Point<S>, c: &Circle<S>) -> S {
    p.dist_sq(&c.center) - c.r_sq.clone()
}

/// Squared median from the apex between sides of squared lengths `adj1_sq`
/// and `adj2_sq` onto the side of squared length `opp_sq`.
pub fn median_length_squared<S: Scalar>(adj1_sq: &S, adj2_sq: &S, opp_sq: &S, tol: &Tolerance<S>) -> Result<S> {
    let two = S::one() + S::one();
    let four = two.clone() + two.clone();
    let value = (two * (adj1_sq.clone() + adj2_sq.clone()) - opp_sq.clone()) / four;
    if value < S::zero() {
        let scale = adj1_sq.clone().max_of(adj2_sq.clone()).max_of(opp_sq.clone());
        if tol.is_zero(&value, &scale) {
            return Ok(S::zero());
        }
        return Err(GeometryError::NegativeResult(value.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(value)
}

/// Whether all points lie on the circle through the first three.
pub fn concyclic<S: Scalar>(points: &[Point<S>], tol: &Tolerance<S>) -> Result<bool> {
    if points.len() < 3 {
        return Err(GeometryError::DegenerateInput);
    }
    let circle = circle_through(&points[0], &points[1], &points[2], tol)?;
    Ok(points[3..]
        .iter()
        .all(|p| tol.is_zero(&power_of_point(p, &circle), &circle.r_sq)))
}

/// True when `p` lies on `l` at the given length scale.
pub fn on_line<S: Scalar>(p: &Point<S>, l: &Line<S>, length_scale_sq: &S, tol: &Tolerance<S>) -> bool {
    let r = l.eval(p);
    let n = l.normal().norm_sq();
    // (signed distance)^2 against the squared scale keeps this exact-friendly
    let dist_sq = r.clone() * r / n;
    if dist_sq.is_zero() {
        return true;
    }
    let eps_sq = tol.rel_eps.clone() * tol.rel_eps.clone();
    let floor_sq = tol.abs_floor.clone() * tol.abs_floor.clone();
    dist_sq <= floor_sq.max_of(eps_sq * length_scale_sq.clone())
}
