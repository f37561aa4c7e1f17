use crate::constructions::{CevianFeet, Side, Triangle, Vertex};
use crate::error::{GeometryError, Result};
use crate::kernel::{Point, Tolerance};
use crate::scalar::Real;

/// Signed `|F start| / |F end|` along the side: positive when the foot lies
/// between the endpoints.
fn signed_split<R: Real>(t: &Triangle<R>, side: Side, foot: &Point<R>, tol: &Tolerance<R>) -> Result<R> {
    let (start, end) = t.side_endpoints(side);
    let side_sq = start.dist_sq(&end);
    let to_start = start - *foot;
    let to_end = end - *foot;
    if tol.is_zero(&to_start.norm_sq(), &side_sq) || tol.is_zero(&to_end.norm_sq(), &side_sq) {
        return Err(GeometryError::FootAtVertex);
    }
    Ok(-to_start.dot(&to_end) / to_end.norm_sq())
}

/// `(A1B/A1C) * (B1C/B1A) * (C1A/C1B)` with signed ratios. Equals 1 exactly
/// when the three cevians are concurrent (or all parallel).
pub fn ceva_product<R: Real>(t: &Triangle<R>, feet: &CevianFeet<R>, tol: &Tolerance<R>) -> Result<R> {
    Side::ALL
        .iter()
        .try_fold(R::one(), |acc, &s| Ok(acc * signed_split(t, s, &feet.on(s), tol)?))
}

/// Both sides of the Steiner relation for two cevians from `vertex`:
/// `lhs = (F1 P / F1 Q) * (F2 P / F2 Q)` and `rhs = (VP / VQ)^2` with `PQ`
/// the opposite side. Unsigned.
pub fn steiner_check<R: Real>(
    t: &Triangle<R>,
    vertex: Vertex,
    foot1: &Point<R>,
    foot2: &Point<R>,
    tol: &Tolerance<R>,
) -> Result<(R, R)> {
    let side = vertex.opposite();
    let r1 = signed_split(t, side, foot1, tol)?.abs();
    let r2 = signed_split(t, side, foot2, tol)?.abs();
    let (p, q) = t.side_endpoints(side);
    let apex = t.vertex(vertex);
    let rhs = apex.dist_sq(&p) / apex.dist_sq(&q);
    Ok((r1 * r2, rhs))
}

/// `A1B^2 - A1C^2 + B1C^2 - B1A^2 + C1A^2 - C1B^2`. Vanishes exactly when
/// the perpendiculars to the sides at the feet are concurrent.
pub fn carnot_sum<R: Real>(t: &Triangle<R>, feet: &CevianFeet<R>) -> R {
    Side::ALL.iter().fold(R::zero(), |acc, &s| {
        let (start, end) = t.side_endpoints(s);
        let f = feet.on(s);
        acc + f.dist_sq(&start) - f.dist_sq(&end)
    })
}
