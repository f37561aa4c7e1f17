use super::{CenterKind, CevianFeet, Side, Triangle};
use crate::error::{GeometryError, Result};
use crate::kernel::{foot_of_perpendicular, power_of_point, Point, Tolerance};
use crate::scalar::Real;

/// Feet of the perpendiculars from `p` onto the three side lines.
///
/// Points on the circumcircle are rejected: their feet are collinear.
pub fn pedal_triangle<R: Real>(t: &Triangle<R>, p: &Point<R>, tol: &Tolerance<R>) -> Result<CevianFeet<R>> {
    let circ = t.circumcircle();
    if tol.is_zero(&power_of_point(p, &circ), &circ.r_sq) {
        return Err(GeometryError::PedalDegenerate);
    }
    Ok(CevianFeet::from_array(
        Side::ALL.map(|s| foot_of_perpendicular(p, &t.side_line(s))),
    ))
}

/// Point on `side` at distance `d` from its start vertex.
fn along<R: Real>(t: &Triangle<R>, side: Side, d: R) -> Point<R> {
    let (p, q) = t.side_endpoints(side);
    p + (q - p) * (d / t.side_len(side.opposite()))
}

/// Incircle touch points, placed by tangent lengths.
pub fn contact_triangle<R: Real>(t: &Triangle<R>) -> CevianFeet<R> {
    CevianFeet::from_array(Side::ALL.map(|side| {
        let (start, _) = side.endpoints();
        along(t, side, t.s() - t.side_len(start))
    }))
}

/// Excircle touch points on their own sides (the cotangent triangle).
pub fn extouch_triangle<R: Real>(t: &Triangle<R>) -> CevianFeet<R> {
    CevianFeet::from_array(Side::ALL.map(|side| {
        let (_, end) = side.endpoints();
        along(t, side, t.s() - t.side_len(end))
    }))
}

/// Altitude feet. Right triangles fail with `PedalDegenerate` because the
/// orthocenter is then a vertex on the circumcircle.
pub fn orthic_triangle<R: Real>(t: &Triangle<R>, tol: &Tolerance<R>) -> Result<CevianFeet<R>> {
    pedal_triangle(t, &super::triangle_center(t, CenterKind::Orthocenter), tol)
}

pub fn medial_triangle<R: Real>(t: &Triangle<R>) -> CevianFeet<R> {
    CevianFeet::from_array(Side::ALL.map(|s| t.side_midpoint(s)))
}

/// Where the lines from each vertex through `p` meet the opposite sides.
pub fn cevian_feet<R: Real>(t: &Triangle<R>, p: &Point<R>) -> Result<CevianFeet<R>> {
    let w = t.barycentric(p);
    let mut feet = [Point::origin(); 3];
    for side in Side::ALL {
        let mut fw = w;
        fw[side.opposite().index()] = R::zero();
        feet[side.index()] = t.from_barycentric(fw).ok_or(GeometryError::CevianParallel)?;
    }
    Ok(CevianFeet::from_array(feet))
}
