use std::f64::consts::TAU;
use std::str::FromStr;

use rand::Rng;

use super::sampling::{
    is_near_equilateral, sample_interior_point, sample_on_segment, sample_point,
    sample_triangle, ACUTE_MARGIN, MAX_REJECTIONS,
};
use super::{Trial, TrialAbort};
use crate::constructions::{
    cevian_feet, contact_triangle, excircle, extouch_triangle, incircle, isogonal_cevian_foot, isogonal_conjugate,
    isotomic_conjugate, isotomic_point_on_side, pedal_triangle, triangle_center, CenterKind, CevianFeet, Side,
    Triangle, Vertex,
};
use crate::error::{GeometryError, VerifyError};
use crate::kernel::{foot_of_perpendicular, line_circle_intersections, line_through, power_of_point, Line, Point};
use crate::relations::{
    carnot_sum, ceva_product, homology, lines_concurrency, orthohomological_pedal_check, orthology,
    six_point_circle, six_point_radius_at, six_point_spread, steiner_check, terquem,
};

type Body = Result<(), TrialAbort>;

/// Separation demanded of claims that must fail.
const SEPARATION: f64 = 1e-3;
/// Within this relative spread of side lengths a triangle counts as
/// equilateral.
const EQUILATERAL_EPS: f64 = 1e-6;
/// Offset of negative-control points, as a fraction of the longest side.
const CONTROL_OFFSET: f64 = 0.01;

macro_rules! suites {
    ($($id:ident => $name:literal, $body:ident, [$(($tally:literal, $req:expr)),*];)*) => {
        /// A registered suite.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum SuiteId {
            $($id,)*
        }

        impl SuiteId {
            pub const ALL: &'static [SuiteId] = &[$(SuiteId::$id,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(SuiteId::$id => $name,)*
                }
            }

            pub(crate) fn body(self) -> fn(&mut Trial) -> Body {
                match self {
                    $(SuiteId::$id => $body,)*
                }
            }

            /// Frequency claims: each named tally must hit on at least the
            /// given fraction of the trials that record it.
            pub fn tally_requirements(self) -> &'static [(&'static str, f64)] {
                match self {
                    $(SuiteId::$id => &[$(($tally, $req)),*],)*
                }
            }
        }
    };
}

suites! {
    Steiner => "steiner", steiner, [];
    CevaIsogonal => "ceva_isogonal", ceva_isogonal, [];
    Carnot => "carnot", carnot, [("perturbed_detected", 0.99)];
    OrthologySymmetry => "orthology_symmetry", orthology_symmetry, [];
    PedalOrthology => "pedal_orthology", pedal_orthology, [];
    SixPoint => "six_point", six_point, [("non_conjugate_detected", 0.99)];
    PowerOfPoint => "power_of_point", power_of_point_suite, [];
    Terquem => "terquem", terquem_suite, [];
    MainTheorem => "main_theorem", main_theorem, [];
    Gergonne => "gergonne", gergonne, [];
    IsotomicTouch => "isotomic_touch", isotomic_touch, [];
    IsotomicConcurrency => "isotomic_concurrency", isotomic_concurrency, [];
    Nagel => "nagel", nagel, [];
    Bevan => "bevan", bevan, [];
    Counterexample => "counterexample", counterexample, [];
    GergonneNagelConjugacy => "gergonne_nagel_conjugacy", gergonne_nagel_conjugacy, [("isogonal_reading_fails", 0.99)];
}

impl FromStr for SuiteId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_owned()))
    }
}

pub fn suite_names() -> impl Iterator<Item = &'static str> {
    SuiteId::ALL.iter().map(|id| id.name())
}

fn triangle(tr: &mut Trial) -> Result<Triangle<f64>, TrialAbort> {
    let t = sample_triangle(&mut tr.rng, tr.config)?;
    tr.triangle(&t);
    Ok(t)
}

fn interior(tr: &mut Trial, t: &Triangle<f64>, name: &str) -> Point<f64> {
    let p = sample_interior_point(&mut tr.rng, t, tr.config.interior_margin);
    tr.point(name, &p);
    p
}

fn center(t: &Triangle<f64>, kind: CenterKind) -> Point<f64> {
    triangle_center(t, kind)
}

/// Records `|p - q| / scale` as a residual, or fails the trial when the
/// concurrence point is missing.
fn close(tr: &mut Trial, name: &str, p: Option<Point<f64>>, q: &Point<f64>, scale: f64) {
    match p {
        Some(p) => {
            let eps = tr.eps();
            tr.at_most(name, p.dist(q) / scale, eps)
        }
        None => tr.predicate(&format!("{name}_exists"), false),
    }
}

fn steiner(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let vertex = Vertex::ALL[tr.rng.random_range(0..3)];
    let (p, q) = t.side_endpoints(vertex.opposite());
    let f1 = sample_on_segment(&mut tr.rng, &p, &q, tr.config.interior_margin);
    tr.point("F1", &f1);
    let f2 = isogonal_cevian_foot(&t, vertex, &f1, tr.tol())?;
    let (lhs, rhs) = steiner_check(&t, vertex, &f1, &f2, tr.tol())?;
    tr.observe("vertex", vertex.index() as f64);
    tr.at_most("steiner_relative", (lhs / rhs - 1.0).abs(), tr.eps());
    Ok(())
}

fn isogonal_feet(t: &Triangle<f64>, feet: &CevianFeet<f64>, tr: &Trial) -> Result<CevianFeet<f64>, GeometryError> {
    Ok(CevianFeet::new(
        isogonal_cevian_foot(t, Vertex::A, &feet.fa, tr.tol())?,
        isogonal_cevian_foot(t, Vertex::B, &feet.fb, tr.tol())?,
        isogonal_cevian_foot(t, Vertex::C, &feet.fc, tr.tol())?,
    ))
}

fn ceva_isogonal(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let p = interior(tr, &t, "P");
    let feet = cevian_feet(&t, &p)?;
    let iso = isogonal_feet(&t, &feet, tr)?;
    let cp = ceva_product(&t, &iso, tr.tol())?;
    tr.at_most("ceva", (cp - 1.0).abs(), tr.eps());
    let h = homology(&t, &iso, tr.tol())?;
    tr.predicate("concurrent", h.concurrent);
    let conj = isogonal_conjugate(&t, &p, tr.tol())?;
    close(tr, "center_vs_conjugate", h.center_point(), &conj, t.max_side());
    Ok(())
}

fn perpendiculars_at(t: &Triangle<f64>, feet: &CevianFeet<f64>) -> [Line<f64>; 3] {
    Side::ALL.map(|s| t.side_line(s).perpendicular_through(&feet.on(s)))
}

fn carnot(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let p = interior(tr, &t, "P");
    let feet = pedal_triangle(&t, &p, tr.tol())?;
    tr.at_most("carnot", carnot_sum(&t, &feet).abs() / t.scale_sq(), tr.eps());
    let lc = lines_concurrency(&perpendiculars_at(&t, &feet), &t.vertices(), tr.tol());
    close(tr, "perpendiculars_meet_at_point", lc.center_point(), &p, t.max_side());

    let side = Side::ALL[tr.rng.random_range(0..3)];
    let shift = tr.rng.random_range(0.01..0.1) * if tr.rng.random::<bool>() { 1.0 } else { -1.0 };
    let (start, end) = t.side_endpoints(side);
    let perturbed = feet.map(|s, f| if s == side { f + (end - start) * shift } else { f });
    let off = carnot_sum(&t, &perturbed).abs() / t.scale_sq();
    tr.observe("perturbed_carnot", off);
    tr.tally("perturbed_detected", off > 10.0 * tr.eps());
    Ok(())
}

fn orthology_symmetry(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let scale = t.max_side();
    let p = interior(tr, &t, "P");
    let pedal = pedal_triangle(&t, &p, tr.tol())?;
    let (fwd, bwd) = orthology(&t, &pedal, tr.tol())?;
    tr.predicate("pedal_forward", fwd.concurrent);
    tr.predicate("pedal_backward", bwd.concurrent);
    tr.at_most("antisymmetry", (fwd.carnot_sum + bwd.carnot_sum).abs() / t.scale_sq(), tr.eps());
    let conj = isogonal_conjugate(&t, &p, tr.tol())?;
    close(tr, "forward_center_vs_conjugate", fwd.center, &conj, scale);
    close(tr, "backward_center_vs_point", bwd.center, &p, scale);

    let other = sample_triangle(&mut tr.rng, tr.config)?;
    for (i, q) in other.vertices().iter().enumerate() {
        tr.point(&format!("Q{}", i + 1), q);
    }
    let (gf, gb) = orthology(&t, &other, tr.tol())?;
    tr.predicate("generic_agree", gf.concurrent == gb.concurrent);
    tr.predicate("generic_not_orthological", !gf.concurrent);
    Ok(())
}

fn pedal_orthology(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let circ = t.circumcircle();
    let mut p = None;
    for _ in 0..MAX_REJECTIONS {
        let q = sample_point(&mut tr.rng, 2.0);
        if (power_of_point(&q, &circ) / circ.r_sq).abs() > 0.01 {
            p = Some(q);
            break;
        }
    }
    let p = p.ok_or(VerifyError::SamplingExhausted(MAX_REJECTIONS))?;
    tr.point("P", &p);
    let scale = t.max_side().max(p.dist(&circ.center));
    let pedal = pedal_triangle(&t, &p, tr.tol())?;
    let (fwd, bwd) = orthology(&t, &pedal, tr.tol())?;
    tr.predicate("forward", fwd.concurrent);
    tr.predicate("backward", bwd.concurrent);
    close(tr, "backward_center_vs_point", bwd.center, &p, scale);
    Ok(())
}

fn six_point(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let p1 = interior(tr, &t, "P1");
    let p2 = isogonal_conjugate(&t, &p1, tr.tol())?;
    let r = six_point_circle(&t, &p1, &p2, tr.tol())?;
    tr.at_most("max_deviation", r.max_deviation, tr.eps());
    let mean = r.mean_radius();
    for v in Vertex::ALL {
        let r_sq = six_point_radius_at(&t, v, &p1, &p2, tr.tol())?;
        tr.at_most("formula_vs_direct", (r_sq.sqrt() - mean).abs() / mean, tr.eps());
    }

    if t.is_acute_with(ACUTE_MARGIN) {
        let h = center(&t, CenterKind::Orthocenter);
        let o = center(&t, CenterKind::Circumcenter);
        let nine = six_point_circle(&t, &h, &o, tr.tol())?;
        let big_r = t.circumcircle().radius();
        tr.at_most("nine_point_deviation", nine.max_deviation, tr.eps());
        tr.at_most("nine_point_radius", (nine.mean_radius() - big_r / 2.0).abs() / big_r, tr.eps());
    }

    let angle = tr.rng.random_range(0.0..TAU);
    let offset = Point::new(angle.cos(), angle.sin()) * (CONTROL_OFFSET * t.max_side());
    let wrong = p1 + offset;
    tr.point("P2_control", &wrong);
    let spread = six_point_spread(&t, &p1, &wrong, tr.tol())?;
    tr.observe("control_deviation", spread.max_deviation);
    tr.tally("non_conjugate_detected", spread.max_deviation > 100.0 * tr.eps());
    Ok(())
}

/// Signed product `(X - P) . (Y - P)` of a secant through `p` aimed at a
/// random point inside the circle.
fn secant_product(tr: &mut Trial, p: &Point<f64>, c: &crate::kernel::Circle<f64>) -> Result<f64, TrialAbort> {
    let r = c.radius();
    for _ in 0..MAX_REJECTIONS {
        let angle = tr.rng.random_range(0.0..TAU);
        let rho = 0.9 * r * tr.rng.random::<f64>().sqrt();
        let aim = c.center + Point::new(angle.cos(), angle.sin()) * rho;
        let Ok(line) = line_through(p, &aim, tr.tol()) else { continue };
        if let [x, y] = line_circle_intersections(&line, c, tr.tol()).as_slice() {
            return Ok((*x - *p).dot(&(*y - *p)));
        }
    }
    Err(VerifyError::SamplingExhausted(MAX_REJECTIONS).into())
}

fn power_of_point_suite(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let c = t.circumcircle();
    let p = sample_point(&mut tr.rng, 2.0);
    tr.point("P", &p);
    let scale_sq = t.scale_sq().max(c.r_sq).max(p.dist_sq(&c.center));
    let power = power_of_point(&p, &c);
    let first = secant_product(tr, &p, &c)?;
    let second = secant_product(tr, &p, &c)?;
    tr.at_most("secant_vs_power", (first - power).abs() / scale_sq, tr.eps());
    tr.at_most("secant_vs_power", (second - power).abs() / scale_sq, tr.eps());
    tr.at_most("secant_vs_secant", (first - second).abs() / scale_sq, tr.eps());
    Ok(())
}

fn terquem_suite(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let p = interior(tr, &t, "P");
    let feet = cevian_feet(&t, &p)?;
    let res = terquem(&t, &feet, tr.tol())?;
    if res.tangent_sides.iter().any(|&b| b) {
        tr.skip();
        return Ok(());
    }
    close(tr, "f1_vs_point", res.f1_point(), &p, t.max_side());
    let second = &res.second_feet;
    let cp = ceva_product(&t, second, tr.tol())?;
    tr.at_most("ceva_second", (cp - 1.0).abs(), tr.eps());
    tr.predicate("f2_concurrent", res.second_homology.concurrent);

    let [a, b, c] = t.vertices();
    let lhs = a.dist(&second.fc) * b.dist(&second.fa) * c.dist(&second.fb);
    let rhs = a.dist(&second.fb) * b.dist(&second.fc) * c.dist(&second.fa);
    tr.at_most("product_identity", (lhs - rhs).abs() / lhs.max(rhs), tr.eps());

    // each vertex sees equal secant products along its two sides
    for v in Vertex::ALL {
        let apex = t.vertex(v);
        let along = |s: Side| (feet.on(s) - apex).dot(&(second.on(s) - apex));
        let (s1, s2) = match v {
            Vertex::A => (Side::AB, Side::CA),
            Vertex::B => (Side::BC, Side::AB),
            Vertex::C => (Side::CA, Side::BC),
        };
        let power = power_of_point(&apex, &res.circle);
        let scale_sq = t.scale_sq().max(res.circle.r_sq);
        tr.at_most("vertex_power", (along(s1) - power).abs() / scale_sq, tr.eps());
        tr.at_most("vertex_power", (along(s2) - power).abs() / scale_sq, tr.eps());
    }
    Ok(())
}

fn main_theorem(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let mut curated = vec![("I", center(&t, CenterKind::Incenter)), ("V", center(&t, CenterKind::Bevan))];
    if t.is_acute_with(ACUTE_MARGIN) {
        curated.push(("O", center(&t, CenterKind::Circumcenter)));
        curated.push(("H", center(&t, CenterKind::Orthocenter)));
    }
    for (name, p) in curated {
        tr.point(name, &p);
        let report = match orthohomological_pedal_check(&t, &p, tr.tol()) {
            Ok(r) => r,
            // the Bevan point may sit on a side line or the circumcircle
            Err(GeometryError::OnSideLine | GeometryError::ConjugateAtInfinity | GeometryError::PedalDegenerate)
                if name == "V" =>
            {
                tr.observe("bevan_excluded", 1.0);
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        tr.predicate(&format!("{name}_hypothesis"), report.homological_1);
        tr.predicate("implication", report.consistent());
        if let (Some(fc), Some(six)) = (&report.feet_circle, &report.six_point) {
            let r_feet = fc.radius();
            tr.at_most("feet_circle_center", fc.center.dist(&six.center) / r_feet, tr.eps());
            tr.at_most("feet_circle_radius", (six.mean_radius() - r_feet).abs() / r_feet, tr.eps());
        }
    }

    let p = interior(tr, &t, "P");
    let report = orthohomological_pedal_check(&t, &p, tr.tol())?;
    tr.predicate("implication", report.consistent());
    tr.tally("random_hypothesis_held", report.homological_1);
    Ok(())
}

fn gergonne(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let contact = contact_triangle(&t);
    let h = homology(&t, &contact, tr.tol())?;
    tr.predicate("concurrent", h.concurrent);
    close(tr, "center_vs_gergonne", h.center_point(), &center(&t, CenterKind::Gergonne), t.max_side());
    let i = incircle(&t);
    for s in Side::ALL {
        let touch = foot_of_perpendicular(&i.center, &t.side_line(s));
        close(tr, "contact_vs_tangency", Some(contact.on(s)), &touch, t.max_side());
    }
    Ok(())
}

fn isotomic_touch(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let scale = t.max_side();
    let contact = contact_triangle(&t);
    let ext = extouch_triangle(&t);
    for s in Side::ALL {
        let (start, end) = s.endpoints();
        let tangent = t.s() - t.side_len(end);
        let d = contact.on(s);
        let d_ext = ext.on(s);
        tr.at_most("contact_tangent_length", (t.vertex(end).dist(&d) - tangent).abs() / scale, tr.eps());
        tr.at_most("extouch_tangent_length", (t.vertex(start).dist(&d_ext) - tangent).abs() / scale, tr.eps());
        let mirrored = isotomic_point_on_side(&t, s, &d, tr.tol())?;
        close(tr, "isotomic_contact_vs_extouch", Some(mirrored), &d_ext, scale);
        let ex = excircle(&t, s.opposite());
        let touch = foot_of_perpendicular(&ex.center, &t.side_line(s));
        close(tr, "extouch_vs_excircle_tangency", Some(touch), &d_ext, scale);
    }
    Ok(())
}

fn isotomic_concurrency(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let p = interior(tr, &t, "P");
    let feet = cevian_feet(&t, &p)?;
    let iso = CevianFeet::new(
        isotomic_point_on_side(&t, Side::BC, &feet.fa, tr.tol())?,
        isotomic_point_on_side(&t, Side::CA, &feet.fb, tr.tol())?,
        isotomic_point_on_side(&t, Side::AB, &feet.fc, tr.tol())?,
    );
    let cp = ceva_product(&t, &iso, tr.tol())?;
    tr.at_most("ceva", (cp - 1.0).abs(), tr.eps());
    let h = homology(&t, &iso, tr.tol())?;
    tr.predicate("concurrent", h.concurrent);
    let conj = isotomic_conjugate(&t, &p, tr.tol())?;
    close(tr, "center_vs_conjugate", h.center_point(), &conj, t.max_side());
    Ok(())
}

fn nagel(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let ext = extouch_triangle(&t);
    let h = homology(&t, &ext, tr.tol())?;
    tr.predicate("concurrent", h.concurrent);
    close(tr, "center_vs_nagel", h.center_point(), &center(&t, CenterKind::Nagel), t.max_side());
    // N = 3G - 2I on the Nagel line
    let g = center(&t, CenterKind::Centroid);
    let i = center(&t, CenterKind::Incenter);
    close(tr, "center_vs_nagel_line", h.center_point(), &(g * 3.0 - i * 2.0), t.max_side());
    Ok(())
}

fn bevan(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let ext = extouch_triangle(&t);
    let o = center(&t, CenterKind::Circumcenter);
    let i = center(&t, CenterKind::Incenter);
    let reflected = o * 2.0 - i;
    let scale = t.max_side().max(reflected.dist(&i));
    tr.at_most("carnot", carnot_sum(&t, &ext).abs() / t.scale_sq(), tr.eps());
    let lc = lines_concurrency(&perpendiculars_at(&t, &ext), &t.vertices(), tr.tol());
    tr.predicate("concurrent", lc.concurrent);
    close(tr, "center_vs_reflected_incenter", lc.center_point(), &reflected, scale);
    close(tr, "bevan_vs_reflected_incenter", Some(center(&t, CenterKind::Bevan)), &reflected, scale);
    Ok(())
}

fn counterexample(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    if is_near_equilateral(&t, EQUILATERAL_EPS) {
        tr.skip();
        return Ok(());
    }
    let contact = homology(&t, &contact_triangle(&t), tr.tol())?;
    let ext = homology(&t, &extouch_triangle(&t), tr.tol())?;
    tr.predicate("contact_homological", contact.concurrent);
    tr.predicate("extouch_homological", ext.concurrent);
    let i = center(&t, CenterKind::Incenter);
    let v = center(&t, CenterKind::Bevan);
    match isogonal_conjugate(&t, &v, tr.tol()) {
        Ok(conj) => tr.at_least("bevan_conjugate_vs_incenter", conj.dist(&i) / t.max_side(), SEPARATION),
        // no finite conjugate, so certainly not the incenter
        Err(GeometryError::OnSideLine | GeometryError::ConjugateAtInfinity) => tr.observe("bevan_conjugate_undefined", 1.0),
        Err(e) => return Err(e.into()),
    }
    if let Ok(spread) = six_point_spread(&t, &i, &v, tr.tol()) {
        tr.observe("incenter_bevan_spread", spread.max_deviation);
    }
    Ok(())
}

fn gergonne_nagel_conjugacy(tr: &mut Trial) -> Body {
    let t = triangle(tr)?;
    let scale = t.max_side();
    let ge = center(&t, CenterKind::Gergonne);
    let na = center(&t, CenterKind::Nagel);
    let isotomic = isotomic_conjugate(&t, &ge, tr.tol())?;
    close(tr, "isotomic_reading", Some(isotomic), &na, scale);
    if !is_near_equilateral(&t, EQUILATERAL_EPS) {
        let isogonal = isogonal_conjugate(&t, &ge, tr.tol())?;
        let d = isogonal.dist(&na) / scale;
        tr.observe("isogonal_distance", d);
        tr.tally("isogonal_reading_fails", d > SEPARATION);
    }
    Ok(())
}
