use serde::Serialize;

use super::{ceva_product, homology, PerspectivityResult};
use crate::constructions::{isogonal_conjugate, pedal_triangle, CevianFeet, Side, Triangle, Vertex};
use crate::error::{GeometryError, Result};
use crate::kernel::{circle_through, line_circle_intersections, Circle, LineIntersection, Point, Tolerance};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SixPointResult<R> {
    /// Midpoint of `P1 P2`.
    pub center: Point<R>,
    /// Distances from the center to `A1, A2, B1, B2, C1, C2`.
    pub radii: [R; 6],
    /// `(max - min) / mean` of the radii.
    pub max_deviation: R,
    pub feet1: CevianFeet<R>,
    pub feet2: CevianFeet<R>,
}

impl<R: Real> SixPointResult<R> {
    pub fn mean_radius(&self) -> R {
        self.radii.iter().fold(R::zero(), |a, &r| a + r) / R::lit(6.0)
    }
}

/// Pedal feet of an isogonal pair and their distances to the midpoint of the
/// pair. Rejects `p2` unless it is the isogonal conjugate of `p1`.
pub fn six_point_circle<R: Real>(t: &Triangle<R>, p1: &Point<R>, p2: &Point<R>, tol: &Tolerance<R>) -> Result<SixPointResult<R>> {
    let conj = isogonal_conjugate(t, p1, tol)?;
    if !tol.is_zero(&conj.dist(p2), &t.max_side()) {
        return Err(GeometryError::NotIsogonalPair);
    }
    six_point_spread(t, p1, p2, tol)
}

/// Same measurement without the isogonal-pair check; for arbitrary pairs
/// the spread is generally far from zero.
pub fn six_point_spread<R: Real>(t: &Triangle<R>, p1: &Point<R>, p2: &Point<R>, tol: &Tolerance<R>) -> Result<SixPointResult<R>> {
    let feet1 = pedal_triangle(t, p1, tol)?;
    let feet2 = pedal_triangle(t, p2, tol)?;
    let center = p1.midpoint(p2);
    let radii = [feet1.fa, feet2.fa, feet1.fb, feet2.fb, feet1.fc, feet2.fc].map(|f| center.dist(&f));
    let max = radii.iter().copied().fold(R::neg_infinity(), R::max);
    let min = radii.iter().copied().fold(R::infinity(), R::min);
    let mean = radii.iter().fold(R::zero(), |a, &r| a + r) / R::lit(6.0);
    Ok(SixPointResult {
        center,
        radii,
        max_deviation: (max - min) / mean,
        feet1,
        feet2,
    })
}

/// Closed-form squared radius of the six-point circle seen from one vertex:
/// `(2 [x1^2 + x2^2 - 2 x1 x2 cos(alpha) cos(angle - alpha)] - d^2) / 4`
/// where `x1, x2` are the distances from the vertex to the two points,
/// `alpha` the angle between one side and the first point, `angle` the
/// vertex angle and `d = |P1 P2|`.
pub fn six_point_radius_formula<R: Real>(x1: R, x2: R, alpha: R, angle: R, d: R, tol: &Tolerance<R>) -> Result<R> {
    let two = R::lit(2.0);
    let inner = x1 * x1 + x2 * x2 - two * x1 * x2 * alpha.cos() * (angle - alpha).cos();
    let value = (two * inner - d * d) / R::lit(4.0);
    if value < R::zero() {
        let scale = (x1 * x1).max(x2 * x2).max(d * d);
        if tol.is_zero(&value, &scale) {
            return Ok(R::zero());
        }
        return Err(GeometryError::NegativeResult(value.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(value)
}

/// Evaluates [`six_point_radius_formula`] with the inputs measured at
/// `vertex` of `t`.
pub fn six_point_radius_at<R: Real>(t: &Triangle<R>, vertex: Vertex, p1: &Point<R>, p2: &Point<R>, tol: &Tolerance<R>) -> Result<R> {
    let apex = t.vertex(vertex);
    let side_dir = t.vertex(vertex.next()) - apex;
    let to_p1 = *p1 - apex;
    let alpha = side_dir.cross(&to_p1).abs().atan2(side_dir.dot(&to_p1));
    six_point_radius_formula(
        apex.dist(p1),
        apex.dist(p2),
        alpha,
        t.angle(vertex),
        p1.dist(p2),
        tol,
    )
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TerquemResult<R> {
    /// Circle through the input feet.
    pub circle: Circle<R>,
    /// Second intersections of `circle` with the side lines.
    pub second_feet: CevianFeet<R>,
    /// Sides where the circle is tangent; the "second" foot is the touch
    /// point there.
    pub tangent_sides: [bool; 3],
    /// Concurrence of the input cevians.
    pub f1: Option<LineIntersection<R>>,
    /// Concurrence of the cevians to the second feet.
    pub f2: Option<LineIntersection<R>>,
    pub second_homology: PerspectivityResult<R>,
}

impl<R: Real> TerquemResult<R> {
    pub fn f1_point(&self) -> Option<Point<R>> {
        self.f1.clone().and_then(LineIntersection::point)
    }

    pub fn f2_point(&self) -> Option<Point<R>> {
        self.f2.clone().and_then(LineIntersection::point)
    }
}

/// Re-cuts the sides with the circle through concurrent cevian feet and
/// locates both concurrence points.
pub fn terquem<R: Real>(t: &Triangle<R>, feet: &CevianFeet<R>, tol: &Tolerance<R>) -> Result<TerquemResult<R>> {
    let cp = ceva_product(t, feet, tol)?;
    if !tol.is_zero(&(cp - R::one()), &R::one()) {
        return Err(GeometryError::NotConcurrentInput(cp.to_f64().unwrap_or(f64::NAN)));
    }
    let circle = circle_through(&feet.fa, &feet.fb, &feet.fc, tol)?;
    let mut tangent_sides = [false; 3];
    let mut second = [Point::origin(); 3];
    for side in Side::ALL {
        let first = feet.on(side);
        let hits = line_circle_intersections(&t.side_line(side), &circle, tol);
        second[side.index()] = match hits.as_slice() {
            [] => return Err(GeometryError::CircleMissesSide),
            [touch] => {
                tangent_sides[side.index()] = true;
                *touch
            }
            [x, y, ..] => {
                let far = if x.dist_sq(&first) >= y.dist_sq(&first) { *x } else { *y };
                if tol.is_zero(&far.dist_sq(&first), &circle.r_sq) {
                    tangent_sides[side.index()] = true;
                }
                far
            }
        };
    }
    let second_feet = CevianFeet::from_array(second);
    let f1 = homology(t, feet, tol)?.center;
    let second_homology = homology(t, &second_feet, tol)?;
    Ok(TerquemResult {
        circle,
        second_feet,
        tangent_sides,
        f1,
        f2: second_homology.center.clone(),
        second_homology,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PedalCheckReport<R> {
    pub p1: Point<R>,
    pub p2: Point<R>,
    pub f1: Option<LineIntersection<R>>,
    pub f2: Option<LineIntersection<R>>,
    /// Hypothesis: the pedal triangle of `p1` is perspective with the
    /// triangle. When false nothing else is claimed.
    pub homological_1: bool,
    pub homological_2: bool,
    /// The circle through the first pedal feet is the six-point circle.
    pub six_feet_concyclic: bool,
    pub feet_circle: Option<Circle<R>>,
    pub six_point: Option<SixPointResult<R>>,
    pub residual_1: R,
    pub residual_2: Option<R>,
}

impl<R: Real> PedalCheckReport<R> {
    /// The conclusion holds whenever the hypothesis does.
    pub fn consistent(&self) -> bool {
        !self.homological_1 || self.homological_2
    }
}

/// Given `p1` whose pedal triangle is perspective with `t`, checks that the
/// pedal triangle of its isogonal conjugate is too, and that both share the
/// circle through the first pedal feet.
pub fn orthohomological_pedal_check<R: Real>(t: &Triangle<R>, p1: &Point<R>, tol: &Tolerance<R>) -> Result<PedalCheckReport<R>> {
    let p2 = isogonal_conjugate(t, p1, tol)?;
    let pedal1 = pedal_triangle(t, p1, tol)?;
    let h1 = homology(t, &pedal1, tol)?;
    let mut report = PedalCheckReport {
        p1: *p1,
        p2,
        f1: h1.center.clone(),
        f2: None,
        homological_1: h1.concurrent,
        homological_2: false,
        six_feet_concyclic: false,
        feet_circle: None,
        six_point: None,
        residual_1: h1.residual,
        residual_2: None,
    };
    if !h1.concurrent {
        return Ok(report);
    }
    let pedal2 = pedal_triangle(t, &p2, tol)?;
    let h2 = homology(t, &pedal2, tol)?;
    let six = six_point_spread(t, p1, &p2, tol)?;
    let feet_circle = circle_through(&pedal1.fa, &pedal1.fb, &pedal1.fc, tol)?;
    let r_feet = feet_circle.radius();
    let r_six = six.mean_radius();
    report.six_feet_concyclic = tol.is_zero(&feet_circle.center.dist(&six.center), &r_feet)
        && tol.is_zero(&(r_feet - r_six), &r_feet)
        && tol.is_zero(&six.max_deviation, &R::one());
    report.f2 = h2.center;
    report.homological_2 = h2.concurrent;
    report.residual_2 = Some(h2.residual);
    report.feet_circle = Some(feet_circle);
    report.six_point = Some(six);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        contact_triangle, medial_triangle, orthic_triangle, triangle_center, CenterKind,
    };

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

    fn assert_close(a: Point<f64>, b: Point<f64>, eps: f64) {
        assert!(a.dist(&b) <= eps, "{a:?} vs {b:?}");
    }

    #[test]
    fn six_point_examples() {
        let t = tacu();
        let r = six_point_circle(&t, &p(2., 1.), &p(1., 1.), &tol()).unwrap();
        assert_close(r.center, p(1.5, 1.), 1e-15);
        for radius in r.radii {
            assert!((radius - 1.25f64.sqrt()).abs() < 1e-14);
        }
        assert!(r.max_deviation <= 1e-9);

        let eq = equilateral();
        let g = triangle_center(&eq, CenterKind::Centroid);
        let r = six_point_circle(&eq, &g, &g, &tol()).unwrap();
        for radius in r.radii {
            assert!((radius - 1. / 3f64.sqrt()).abs() < 1e-14);
        }

        let r = six_point_circle(&t345(), &p(1., 1.), &p(1., 1.), &tol()).unwrap();
        assert_close(r.center, p(1., 1.), 1e-15);
        for radius in r.radii {
            assert!((radius - 1.).abs() < 1e-14);
        }
    }

    #[test]
    fn six_point_errors() {
        let t = tacu();
        assert_eq!(
            six_point_circle(&t, &p(2., 1.), &p(1.1, 1.), &tol()),
            Err(GeometryError::NotIsogonalPair)
        );
        // a vertex lies on the circumcircle and on two side lines
        assert!(six_point_circle(&t, &p(0., 0.), &p(0., 0.), &tol()).is_err());
        let spread = six_point_spread(&t, &p(2., 1.), &p(1.1, 1.2), &tol()).unwrap();
        assert!(spread.max_deviation > 1e-3);
    }

    #[test]
    fn radius_formula_examples() {
        // collapse: P1 at the vertex, d = x2
        for (angle, alpha) in [(1.0f64, 0.3), (2.0, 1.9)] {
            let v = six_point_radius_formula(0., 2., alpha, angle, 2., &tol()).unwrap();
            assert!((v - 1.).abs() < 1e-15);
        }
        // TACU, P1 = O, P2 = H, seen from A
        let alpha = 0.5f64.atan();
        let angle = 3f64.atan();
        let v = six_point_radius_formula(5f64.sqrt(), 2f64.sqrt(), alpha, angle, 1., &tol()).unwrap();
        assert!((v - 1.25).abs() < 1e-14);
        let t = tacu();
        let at_a = six_point_radius_at(&t, Vertex::A, &p(2., 1.), &p(1., 1.), &tol()).unwrap();
        assert!((at_a - 1.25).abs() < 1e-14);
        // isosceles apex with P1 = P2 on the bisector: squared distance to the foot on AB
        let iso = Triangle::new(p(0., 0.), p(3., 1.), p(1., 3.)).unwrap();
        let i = triangle_center(&iso, CenterKind::Incenter);
        let x = i.norm();
        let angle = iso.angle(Vertex::A);
        let v = six_point_radius_formula(x, x, angle / 2., angle, 0., &tol()).unwrap();
        let foot = crate::kernel::foot_of_perpendicular(&i, &iso.side_line(Side::AB));
        assert!((v - i.dist_sq(&foot)).abs() < 1e-14);
        assert!(matches!(
            six_point_radius_formula(1., 1., 0., 0., 3., &tol()),
            Err(GeometryError::NegativeResult(_))
        ));
    }

    #[test]
    fn terquem_tacu_medial() {
        let t = tacu();
        let r = terquem(&t, &medial_triangle(&t), &tol()).unwrap();
        assert_close(r.circle.center, p(1.5, 1.), 1e-14);
        let orthic = orthic_triangle(&t, &tol()).unwrap();
        for s in Side::ALL {
            assert_close(r.second_feet.on(s), orthic.on(s), 1e-14);
        }
        assert_close(r.f1_point().unwrap(), p(5. / 3., 1.), 1e-14);
        assert_close(r.f2_point().unwrap(), p(1., 1.), 1e-14);
        assert_eq!(r.tangent_sides, [false; 3]);
    }

    #[test]
    fn terquem_equilateral_is_tangent_everywhere() {
        let eq = equilateral();
        let r = terquem(&eq, &medial_triangle(&eq), &tol()).unwrap();
        let g = triangle_center(&eq, CenterKind::Centroid);
        assert_close(r.f1_point().unwrap(), g, 1e-14);
        assert_close(r.f2_point().unwrap(), g, 1e-14);
        assert_eq!(r.tangent_sides, [true; 3]);
    }

    #[test]
    fn terquem_t345_contact_power_products() {
        let t = t345();
        let feet = contact_triangle(&t);
        let r = terquem(&t, &feet, &tol()).unwrap();
        let two = r.second_feet;
        let [a, b, c] = t.vertices();
        // signed secant products from each vertex on its two sides
        let pa = (feet.fc - a).dot(&(two.fc - a)) - (feet.fb - a).dot(&(two.fb - a));
        let pb = (feet.fa - b).dot(&(two.fa - b)) - (feet.fc - b).dot(&(two.fc - b));
        let pc = (feet.fb - c).dot(&(two.fb - c)) - (feet.fa - c).dot(&(two.fa - c));
        for res in [pa, pb, pc] {
            assert!(res.abs() < 1e-13);
        }
        let lhs = a.dist(&two.fc) * b.dist(&two.fa) * c.dist(&two.fb);
        let rhs = a.dist(&two.fb) * b.dist(&two.fc) * c.dist(&two.fa);
        assert!((lhs - rhs).abs() <= 1e-9 * rhs.max(1.));
        // the incircle touches every side, so the second feet are the first
        assert_eq!(r.tangent_sides, [true; 3]);
        assert_close(r.f2_point().unwrap(), p(8. / 11., 9. / 11.), 1e-6);
    }

    #[test]
    fn terquem_rejects_non_concurrent() {
        let t = t345();
        let feet = CevianFeet::new(p(2., 1.5), p(0., 1.5), p(1., 0.));
        assert!(matches!(terquem(&t, &feet, &tol()), Err(GeometryError::NotConcurrentInput(_))));
    }

    #[test]
    fn pedal_check_examples() {
        let t = tacu();
        let r = orthohomological_pedal_check(&t, &p(2., 1.), &tol()).unwrap();
        assert_close(r.p2, p(1., 1.), 1e-14);
        assert!(r.homological_1 && r.homological_2 && r.six_feet_concyclic);
        assert_close(r.f1.clone().unwrap().point().unwrap(), p(5. / 3., 1.), 1e-14);
        assert_close(r.f2.clone().unwrap().point().unwrap(), p(1., 1.), 1e-14);

        let r = orthohomological_pedal_check(&t345(), &p(1., 1.), &tol()).unwrap();
        let gerg = p(8. / 11., 9. / 11.);
        assert_close(r.f1.clone().unwrap().point().unwrap(), gerg, 1e-14);
        assert_close(r.f2.clone().unwrap().point().unwrap(), gerg, 1e-14);
        assert!(r.homological_1 && r.homological_2 && r.six_feet_concyclic);

        // a generic interior point: hypothesis fails, nothing claimed
        let r = orthohomological_pedal_check(&t, &p(1.6, 0.8), &tol()).unwrap();
        assert!(!r.homological_1);
        assert!(r.residual_1 > 1e-4, "{}", r.residual_1);
        assert!(r.consistent());
        assert!(r.six_point.is_none());
    }
}
