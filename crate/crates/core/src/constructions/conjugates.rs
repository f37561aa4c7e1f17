//! Isogonal and isotomic conjugation, for points and for single cevians.

use super::{Side, Triangle, Vertex};
use crate::error::{GeometryError, Result};
use crate::kernel::{intersect_lines, on_line, LineIntersection, Line, Point, Tolerance};
use crate::scalar::Real;

fn conjugate_by<R: Real>(t: &Triangle<R>, p: &Point<R>, weights: [R; 3], tol: &Tolerance<R>) -> Result<Point<R>> {
    let w = t.barycentric(p);
    if w.iter().any(|x| tol.is_zero(x, &R::one())) {
        return Err(GeometryError::OnSideLine);
    }
    let q = [weights[0] / w[0], weights[1] / w[1], weights[2] / w[2]];
    let sum = q[0] + q[1] + q[2];
    let magnitude = q[0].abs().max(q[1].abs()).max(q[2].abs());
    if tol.is_zero(&sum, &magnitude) {
        return Err(GeometryError::ConjugateAtInfinity);
    }
    t.from_barycentric(q).ok_or(GeometryError::ConjugateAtInfinity)
}

/// `(x : y : z) -> (a^2/x : b^2/y : c^2/z)`.
pub fn isogonal_conjugate<R: Real>(t: &Triangle<R>, p: &Point<R>, tol: &Tolerance<R>) -> Result<Point<R>> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    conjugate_by(t, p, [a * a, b * b, c * c], tol)
}

/// `(x : y : z) -> (1/x : 1/y : 1/z)`.
pub fn isotomic_conjugate<R: Real>(t: &Triangle<R>, p: &Point<R>, tol: &Tolerance<R>) -> Result<Point<R>> {
    conjugate_by(t, p, [R::one(); 3], tol)
}

fn check_on_side<R: Real>(t: &Triangle<R>, side: Side, p: &Point<R>, tol: &Tolerance<R>) -> Result<()> {
    if on_line(p, &t.side_line(side), &t.scale_sq(), tol) {
        Ok(())
    } else {
        Err(GeometryError::FootOffCarrier)
    }
}

/// Reflects the cevian `vertex -> foot` in the internal bisector at `vertex`
/// and returns where the reflected line meets the opposite side line.
pub fn isogonal_cevian_foot<R: Real>(
    t: &Triangle<R>,
    vertex: Vertex,
    foot: &Point<R>,
    tol: &Tolerance<R>,
) -> Result<Point<R>> {
    let side = vertex.opposite();
    check_on_side(t, side, foot, tol)?;
    let (p, q) = t.side_endpoints(side);
    let side_sq = p.dist_sq(&q);
    if tol.is_zero(&foot.dist_sq(&p), &side_sq) || tol.is_zero(&foot.dist_sq(&q), &side_sq) {
        return Err(GeometryError::FootAtVertex);
    }
    let apex = t.vertex(vertex);
    let to_p = p - apex;
    let to_q = q - apex;
    let bisector = to_p * to_p.norm().recip() + to_q * to_q.norm().recip();
    let axis = bisector * bisector.norm().recip();
    let d = *foot - apex;
    let reflected = axis * (R::lit(2.0) * d.dot(&axis)) - d;
    let normal = reflected.perp();
    let cevian = Line::new(normal.x, normal.y, -normal.dot(&apex))?;
    match intersect_lines(&cevian, &t.side_line(side), tol) {
        Ok(LineIntersection::Point(x)) => Ok(x),
        Ok(LineIntersection::AtInfinity) | Err(_) => Err(GeometryError::ReflectedCevianParallel),
    }
}

/// Reflection of `p` through the midpoint of `side`.
pub fn isotomic_point_on_side<R: Real>(t: &Triangle<R>, side: Side, p: &Point<R>, tol: &Tolerance<R>) -> Result<Point<R>> {
    check_on_side(t, side, p, tol)?;
    let (a, b) = t.side_endpoints(side);
    Ok(a + b - *p)
}
