use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{extouch_triangle, Side, Triangle, Vertex};
use crate::kernel::{intersect_lines, Circle, Point, Tolerance};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CenterKind {
    Centroid,
    Incenter,
    Circumcenter,
    Orthocenter,
    Gergonne,
    Nagel,
    Bevan,
    Symmedian,
}

impl CenterKind {
    pub const ALL: [CenterKind; 8] = [
        CenterKind::Centroid,
        CenterKind::Incenter,
        CenterKind::Circumcenter,
        CenterKind::Orthocenter,
        CenterKind::Gergonne,
        CenterKind::Nagel,
        CenterKind::Bevan,
        CenterKind::Symmedian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CenterKind::Centroid => "centroid",
            CenterKind::Incenter => "incenter",
            CenterKind::Circumcenter => "circumcenter",
            CenterKind::Orthocenter => "orthocenter",
            CenterKind::Gergonne => "gergonne",
            CenterKind::Nagel => "nagel",
            CenterKind::Bevan => "bevan",
            CenterKind::Symmedian => "symmedian",
        }
    }
}

impl fmt::Display for CenterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CenterKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|k| k.name() == lower)
            .ok_or_else(|| format!("unknown center `{s}`"))
    }
}

pub fn triangle_center<R: Real>(t: &Triangle<R>, kind: CenterKind) -> Point<R> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let s = t.s();
    let bary = |w: [R; 3]| t.from_barycentric(w).expect("positive weights");
    match kind {
        CenterKind::Centroid => bary([R::one(); 3]),
        CenterKind::Incenter => bary([a, b, c]),
        CenterKind::Circumcenter => t.circumcircle().center,
        CenterKind::Orthocenter => orthocenter(t),
        CenterKind::Gergonne => bary([(s - a).recip(), (s - b).recip(), (s - c).recip()]),
        CenterKind::Nagel => bary([s - a, s - b, s - c]),
        CenterKind::Bevan => bevan(t),
        CenterKind::Symmedian => bary([a * a, b * b, c * c]),
    }
}

/// Intersection of the altitudes from A and B.
fn orthocenter<R: Real>(t: &Triangle<R>) -> Point<R> {
    let alt_a = t.side_line(Side::BC).perpendicular_through(&t.vertex(Vertex::A));
    let alt_b = t.side_line(Side::CA).perpendicular_through(&t.vertex(Vertex::B));
    intersect_lines(&alt_a, &alt_b, &Tolerance::exact())
        .ok()
        .and_then(|x| x.point())
        .expect("altitudes of a valid triangle meet")
}

/// Concurrence of the perpendiculars raised on BC and AB at the extouch
/// points.
fn bevan<R: Real>(t: &Triangle<R>) -> Point<R> {
    let ext = extouch_triangle(t);
    let on_bc = t.side_line(Side::BC).perpendicular_through(&ext.fa);
    let on_ab = t.side_line(Side::AB).perpendicular_through(&ext.fc);
    intersect_lines(&on_bc, &on_ab, &Tolerance::exact())
        .ok()
        .and_then(|x| x.point())
        .expect("perpendiculars to two non-parallel sides meet")
}

pub fn incircle<R: Real>(t: &Triangle<R>) -> Circle<R> {
    let r = t.area() / t.s();
    Circle::from_radius(triangle_center(t, CenterKind::Incenter), r)
}

/// The excircle tangent to the side opposite `opposite`.
pub fn excircle<R: Real>(t: &Triangle<R>, opposite: Vertex) -> Circle<R> {
    let mut w = [t.a(), t.b(), t.c()];
    w[opposite.index()] = -w[opposite.index()];
    let center = t.from_barycentric(w).expect("excenter weights never sum to zero");
    let r = t.area() / (t.s() - t.side_len(opposite));
    Circle::from_radius(center, r)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{contact_triangle, Side};
    use super::*;

    /// Independent barycentric evaluation from raw side lengths.
    fn bary_oracle(t: &Triangle<f64>, w: [f64; 3]) -> Point<f64> {
        let [a, b, c] = t.vertices();
        let sum = w[0] + w[1] + w[2];
        Point::new(
            (w[0] * a.x + w[1] * b.x + w[2] * c.x) / sum,
            (w[0] * a.y + w[1] * b.y + w[2] * c.y) / sum,
        )
    }

    #[test]
    fn t345_centers() {
        let t = t345();
        let (a, b, c, s) = (5., 3., 4., 6.);
        let inc = bary_oracle(&t, [a, b, c]);
        assert_close(inc, p(1., 1.), 1e-15);
        assert_close(triangle_center(&t, CenterKind::Incenter), inc, 1e-15);
        assert_close(triangle_center(&t, CenterKind::Circumcenter), p(2., 1.5), 1e-15);
        let nagel = bary_oracle(&t, [s - a, s - b, s - c]);
        assert_close(nagel, p(2., 1.), 1e-15);
        assert_close(triangle_center(&t, CenterKind::Nagel), nagel, 1e-15);
        let gerg = bary_oracle(&t, [1. / (s - a), 1. / (s - b), 1. / (s - c)]);
        assert_close(gerg, p(8. / 11., 9. / 11.), 1e-15);
        assert_close(triangle_center(&t, CenterKind::Gergonne), gerg, 1e-15);
        assert_close(triangle_center(&t, CenterKind::Bevan), p(3., 2.), 1e-14);
        assert_close(triangle_center(&t, CenterKind::Symmedian), p(0.72, 0.96), 1e-15);
        assert_close(triangle_center(&t, CenterKind::Centroid), p(4. / 3., 1.), 1e-15);
        // right angle at A
        assert_close(triangle_center(&t, CenterKind::Orthocenter), p(0., 0.), 1e-15);
    }

    #[test]
    fn tacu_orthocenter() {
        assert_close(triangle_center(&tacu(), CenterKind::Orthocenter), p(1., 1.), 1e-15);
    }

    #[test]
    fn bevan_closed_form() {
        for t in [t345(), tacu(), equilateral()] {
            let o = triangle_center(&t, CenterKind::Circumcenter);
            let i = triangle_center(&t, CenterKind::Incenter);
            assert_close(triangle_center(&t, CenterKind::Bevan), o * 2. - i, 1e-13);
        }
    }

    #[test]
    fn incircle_examples() {
        let c = incircle(&t345());
        assert_close(c.center, p(1., 1.), 1e-15);
        assert!((c.r_sq - 1.).abs() < 1e-15);
        let c = incircle(&equilateral());
        let r = 1. / 3f64.sqrt();
        assert_close(c.center, p(1., r), 1e-15);
        assert!((c.radius() - r).abs() < 1e-15);
        for t in [t345(), tacu(), equilateral()] {
            let c = incircle(&t);
            for s in Side::ALL {
                assert!((t.side_line(s).eval(&c.center).abs() - c.radius()).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn excircle_examples() {
        let t = t345();
        let ex = excircle(&t, Vertex::A);
        assert_close(ex.center, bary_oracle(&t, [-5., 3., 4.]), 1e-15);
        assert_close(ex.center, p(6., 6.), 1e-14);
        assert!((ex.radius() - 6.).abs() < 1e-14);
        for t in [t345(), tacu()] {
            for v in Vertex::ALL {
                let ex = excircle(&t, v);
                for s in Side::ALL {
                    let d = t.side_line(s).eval(&ex.center).abs();
                    assert!((d - ex.radius()).abs() <= 1e-12 * ex.radius());
                }
            }
        }
        // touch point on BC: foot of the excenter
        let touch = crate::kernel::foot_of_perpendicular(&ex.center, &t.side_line(Side::BC));
        assert_close(touch, p(2.4, 1.2), 1e-14);
    }

    #[test]
    fn equilateral_centers_coincide() {
        let t = equilateral();
        let g = triangle_center(&t, CenterKind::Centroid);
        for k in CenterKind::ALL {
            assert_close(triangle_center(&t, k), g, 1e-14);
        }
        let _ = contact_triangle(&t);
    }

    #[test]
    fn parse_kind() {
        assert_eq!("Nagel".parse::<CenterKind>(), Ok(CenterKind::Nagel));
        assert!("x".parse::<CenterKind>().is_err());
    }
}
