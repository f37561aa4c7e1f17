use serde::Serialize;

use crate::constructions::VertexTriple;
use crate::error::{GeometryError, Result};
use crate::kernel::{intersect_lines, line_through, Line, LineIntersection, Point, Tolerance};
use crate::scalar::Real;

/// Outcome of a concurrency test on three lines.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerspectivityResult<R> {
    pub concurrent: bool,
    /// Present only when `concurrent`.
    pub center: Option<LineIntersection<R>>,
    /// `|det|` of the three lines after normalizing coordinates to the unit
    /// scale of the configuration. Dimensionless.
    pub residual: R,
}

impl<R: Real> PerspectivityResult<R> {
    pub fn center_point(&self) -> Option<Point<R>> {
        self.center.clone().and_then(LineIntersection::point)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrthologyResult<R> {
    pub carnot_sum: R,
    pub concurrent: bool,
    pub center: Option<Point<R>>,
}

/// Centroid and length scale of a point cloud, used to express lines in
/// dimensionless coordinates.
struct Frame<R> {
    origin: Point<R>,
    scale: R,
}

impl<R: Real> Frame<R> {
    fn of(points: &[Point<R>]) -> Self {
        let n = R::from_usize(points.len()).expect("small count");
        let origin = points.iter().fold(Point::origin(), |acc, p| acc + *p) * n.recip();
        let mut max_sq = R::zero();
        for (i, p) in points.iter().enumerate() {
            for q in &points[i + 1..] {
                max_sq = max_sq.max(p.dist_sq(q));
            }
        }
        let scale = if max_sq > R::zero() { max_sq.sqrt() } else { R::one() };
        Self { origin, scale }
    }

    fn to_local(&self, p: &Point<R>) -> Point<R> {
        (*p - self.origin) * self.scale.recip()
    }

    fn to_world(&self, p: &Point<R>) -> Point<R> {
        *p * self.scale + self.origin
    }
}

fn det3<R: Real>(l: &[Line<R>; 3]) -> R {
    l[0].u * (l[1].v * l[2].w - l[2].v * l[1].w) - l[0].v * (l[1].u * l[2].w - l[2].u * l[1].w)
        + l[0].w * (l[1].u * l[2].v - l[2].u * l[1].v)
}

/// Meeting point of the best-conditioned pair among three lines given in
/// local coordinates, mapped back to world coordinates.
fn pair_center<R: Real>(lines: &[Line<R>; 3], frame: &Frame<R>, tol: &Tolerance<R>) -> LineIntersection<R> {
    let cross = |a: usize, b: usize| (lines[a].u * lines[b].v - lines[b].u * lines[a].v).abs();
    let (i, j) = [(0, 1), (1, 2), (0, 2)]
        .into_iter()
        .max_by(|&(a, b), &(c, d)| cross(a, b).partial_cmp(&cross(c, d)).unwrap_or(std::cmp::Ordering::Equal))
        .expect("three pairs");
    match intersect_lines(&lines[i], &lines[j], tol) {
        Ok(LineIntersection::Point(p)) => LineIntersection::Point(frame.to_world(&p)),
        // all three parallel at tolerance
        _ => LineIntersection::AtInfinity,
    }
}

/// Concurrency of three lines given in normalized local coordinates.
fn concurrency<R: Real>(lines: &[Line<R>; 3], frame: &Frame<R>, tol: &Tolerance<R>) -> PerspectivityResult<R> {
    let residual = det3(lines).abs();
    let concurrent = tol.is_zero(&residual, &R::one());
    PerspectivityResult {
        concurrent,
        center: concurrent.then(|| pair_center(lines, frame, tol)),
        residual,
    }
}

fn to_local_lines<R: Real>(lines: &[Line<R>; 3], frame: &Frame<R>) -> [Line<R>; 3] {
    lines.clone().map(|l| {
        // substitute x = scale * x' + origin
        let w = (l.w + l.u * frame.origin.x + l.v * frame.origin.y) / frame.scale;
        Line::new(l.u, l.v, w).expect("normalized line")
    })
}

/// Whether the lines joining corresponding vertices of the two triples are
/// concurrent, and where.
pub fn homology<R: Real>(
    t1: &impl VertexTriple<R>,
    t2: &impl VertexTriple<R>,
    tol: &Tolerance<R>,
) -> Result<PerspectivityResult<R>> {
    let (p, q) = (t1.triple(), t2.triple());
    let all = [p[0], p[1], p[2], q[0], q[1], q[2]];
    let frame = Frame::of(&all);
    let mut lines = Vec::with_capacity(3);
    for i in 0..3 {
        let (a, b) = (frame.to_local(&p[i]), frame.to_local(&q[i]));
        if tol.is_zero(&a.dist_sq(&b), &R::one()) {
            return Err(GeometryError::CoincidentVertexPair);
        }
        lines.push(line_through(&a, &b, &Tolerance::exact())?);
    }
    let lines: [Line<R>; 3] = lines.try_into().expect("three lines");
    Ok(concurrency(&lines, &frame, tol))
}

/// Concurrency of three given lines, in world coordinates. The points set
/// the length scale of the test.
pub fn lines_concurrency<R: Real>(lines: &[Line<R>; 3], frame_points: &[Point<R>], tol: &Tolerance<R>) -> PerspectivityResult<R> {
    let frame = Frame::of(frame_points);
    concurrency(&to_local_lines(lines, &frame), &frame, tol)
}

fn one_way<R: Real>(
    from: &[Point<R>; 3],
    onto: &[Point<R>; 3],
    scale_sq: R,
    tol: &Tolerance<R>,
) -> Result<OrthologyResult<R>> {
    let mut sum = R::zero();
    let mut perps = Vec::with_capacity(3);
    for i in 0..3 {
        let (next, prev) = (onto[(i + 1) % 3], onto[(i + 2) % 3]);
        sum = sum + from[i].dist_sq(&next) - from[i].dist_sq(&prev);
        let side = line_through(&next, &prev, &Tolerance::exact())?;
        perps.push(side.perpendicular_through(&from[i]));
    }
    let concurrent = tol.is_zero(&sum, &scale_sq);
    let center = if concurrent {
        let perps: [Line<R>; 3] = perps.try_into().expect("three lines");
        let mut pts = from.to_vec();
        pts.extend_from_slice(onto);
        let frame = Frame::of(&pts);
        pair_center(&to_local_lines(&perps, &frame), &frame, tol).point()
    } else {
        None
    };
    Ok(OrthologyResult {
        carnot_sum: sum,
        concurrent,
        center,
    })
}

/// Orthology in both directions. `forward` drops perpendiculars from the
/// vertices of `t1` onto the side lines of `t2`; `backward` the reverse.
/// The two Carnot sums are exact negatives of each other, so the two
/// concurrency verdicts always agree.
pub fn orthology<R: Real>(
    t1: &impl VertexTriple<R>,
    t2: &impl VertexTriple<R>,
    tol: &Tolerance<R>,
) -> Result<(OrthologyResult<R>, OrthologyResult<R>)> {
    let (p, q) = (t1.triple(), t2.triple());
    let all = [p[0], p[1], p[2], q[0], q[1], q[2]];
    let scale = Frame::of(&all).scale;
    let scale_sq = scale * scale;
    Ok((one_way(&p, &q, scale_sq, tol)?, one_way(&q, &p, scale_sq, tol)?))
}

/// Orthological with a shared orthology center.
pub fn is_bilogical<R: Real>(t1: &impl VertexTriple<R>, t2: &impl VertexTriple<R>, tol: &Tolerance<R>) -> Result<bool> {
    let (fwd, bwd) = orthology(t1, t2, tol)?;
    let (Some(m), Some(m2)) = (fwd.center, bwd.center) else {
        return Ok(false);
    };
    let (p, q) = (t1.triple(), t2.triple());
    let scale = Frame::of(&[p[0], p[1], p[2], q[0], q[1], q[2]]).scale;
    Ok(fwd.concurrent && bwd.concurrent && tol.is_zero(&m.dist(&m2), &scale))
}

/// Simultaneously orthological and homological.
pub fn is_orthohomological<R: Real>(
    t1: &impl VertexTriple<R>,
    t2: &impl VertexTriple<R>,
    tol: &Tolerance<R>,
) -> Result<bool> {
    Ok(orthology(t1, t2, tol)?.0.concurrent && homology(t1, t2, tol)?.concurrent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{contact_triangle, extouch_triangle, medial_triangle, pedal_triangle, Triangle};

    fn p(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y)
    }

    fn t345() -> Triangle<f64> {
        Triangle::new(p(0., 0.), p(4., 0.), p(0., 3.)).unwrap()
    }

    fn tacu() -> Triangle<f64> {
        Triangle::new(p(0., 0.), p(4., 0.), p(1., 3.)).unwrap()
    }

    fn equilateral() -> Triangle<f64> {
        Triangle::new(p(0., 0.), p(2., 0.), p(1., 3f64.sqrt())).unwrap()
    }

    fn tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    fn close(a: Option<Point<f64>>, b: Point<f64>) {
        let a = a.expect("center present");
        assert!(a.dist(&b) < 1e-13, "{a:?} vs {b:?}");
    }

    #[test]
    fn homology_examples() {
        let t = tacu();
        let h = homology(&t, &medial_triangle(&t), &tol()).unwrap();
        assert!(h.concurrent);
        close(h.center_point(), p(5. / 3., 1.));
        let t = t345();
        close(homology(&t, &contact_triangle(&t), &tol()).unwrap().center_point(), p(8. / 11., 9. / 11.));
        close(homology(&t, &extouch_triangle(&t), &tol()).unwrap().center_point(), p(2., 1.));
    }

    #[test]
    fn homology_negative_fixture() {
        // reflection of TACU through the exterior point (5, -1), then one
        // vertex nudged off the symmetric position
        let t = tacu();
        let o = p(5., -1.);
        let mut refl = t.vertices().map(|v| o * 2. - v);
        refl[2] = refl[2] + p(0.7, 0.3);
        let h = homology(&t, &refl, &tol()).unwrap();
        assert!(!h.concurrent);
        assert!(h.residual > 1e-3, "{}", h.residual);
        assert!(h.center.is_none());
    }

    #[test]
    fn homology_parallel_lines_concur_at_infinity() {
        let t = tacu();
        let shifted = t.vertices().map(|v| v + p(3., 1.));
        let h = homology(&t, &shifted, &tol()).unwrap();
        assert!(h.concurrent);
        assert_eq!(h.center, Some(LineIntersection::AtInfinity));
    }

    #[test]
    fn homology_rejects_shared_vertex() {
        let t = tacu();
        let mut other = medial_triangle(&t).as_array();
        other[0] = t.vertices()[0];
        assert_eq!(homology(&t, &other, &tol()), Err(GeometryError::CoincidentVertexPair));
    }

    #[test]
    fn orthology_examples() {
        let t = tacu();
        let (fwd, bwd) = orthology(&t, &medial_triangle(&t), &tol()).unwrap();
        assert!(fwd.concurrent && bwd.concurrent);
        close(fwd.center, p(1., 1.));
        close(bwd.center, p(2., 1.));
        let (fwd, bwd) = orthology(&t, &t, &tol()).unwrap();
        close(fwd.center, p(1., 1.));
        close(bwd.center, p(1., 1.));
    }

    #[test]
    fn orthology_generic_pair_fixture() {
        let t1 = Triangle::new(p(-0.8, -0.3), p(0.6, -0.7), p(0.1, 0.9)).unwrap();
        let t2 = Triangle::new(p(-0.2, 0.4), p(0.9, 0.2), p(-0.5, -0.9)).unwrap();
        let (fwd, bwd) = orthology(&t1, &t2, &tol()).unwrap();
        assert!(!fwd.concurrent && !bwd.concurrent);
        assert!(fwd.carnot_sum.abs() > 1e-3);
        assert!((fwd.carnot_sum + bwd.carnot_sum).abs() < 1e-15);
    }

    #[test]
    fn pedal_orthology_center_is_the_point() {
        let t = tacu();
        let q = p(1.7, 0.6);
        let pedal = pedal_triangle(&t, &q, &tol()).unwrap();
        let (fwd, bwd) = orthology(&t, &pedal, &tol()).unwrap();
        assert!(fwd.concurrent);
        close(bwd.center, q);
    }

    #[test]
    fn bilogical_examples() {
        let t = tacu();
        assert!(!is_bilogical(&t, &medial_triangle(&t), &tol()).unwrap());
        let eq = equilateral();
        assert!(is_bilogical(&eq, &medial_triangle(&eq), &tol()).unwrap());
        assert!(is_bilogical(&t, &t, &tol()).unwrap());
    }

    #[test]
    fn orthohomological_examples() {
        let t = t345();
        assert!(is_orthohomological(&t, &contact_triangle(&t), &tol()).unwrap());
        let u = tacu();
        assert!(is_orthohomological(&u, &medial_triangle(&u), &tol()).unwrap());
        let t1 = Triangle::new(p(-0.8, -0.3), p(0.6, -0.7), p(0.1, 0.9)).unwrap();
        let t2 = Triangle::new(p(-0.2, 0.4), p(0.9, 0.2), p(-0.5, -0.9)).unwrap();
        assert!(!is_orthohomological(&t1, &t2, &tol()).unwrap());
    }
}
