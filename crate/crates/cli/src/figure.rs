use clap::ValueEnum;
use orthocevia::constructions::{
    cevian_feet, contact_triangle, excircle, extouch_triangle, incircle, isogonal_conjugate, pedal_triangle,
    triangle_center, CenterKind, Side, Vertex,
};
use orthocevia::kernel::foot_of_perpendicular;
use orthocevia::relations::{six_point_circle, terquem};
use orthocevia::{Circle, Point};
use svg::node::element::{Circle as SvgCircle, Ellipse, Group, Line, Polygon, Text};
use svg::{Document, Node};

use crate::scene::{CliError, CliResult, Scene};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum FigureId {
    Fig3Contact,
    Fig5Orthology,
    Fig7Sixpoint,
    Fig9Terquem,
    Fig10Excircle,
}

impl FigureId {
    /// Triangle used when no scene is given.
    pub fn default_triangle(self) -> [Point; 3] {
        let p = Point::new;
        match self {
            FigureId::Fig3Contact | FigureId::Fig10Excircle => [p(0., 0.), p(4., 0.), p(0., 3.)],
            _ => [p(0., 0.), p(4., 0.), p(1., 3.)],
        }
    }
}

#[derive(Clone, Copy)]
enum Pen {
    Triangle,
    Thin,
    Dashed,
    Circle,
}

enum Item {
    Polygon([Point; 3], Pen),
    Segment(Point, Point, Pen),
    Circle(Circle, Pen),
    Dot(Point, String),
}

#[derive(Default)]
struct Sketch {
    items: Vec<Item>,
}

impl Sketch {
    fn polygon(&mut self, pts: [Point; 3], pen: Pen) {
        self.items.push(Item::Polygon(pts, pen));
    }

    fn segment(&mut self, a: Point, b: Point, pen: Pen) {
        self.items.push(Item::Segment(a, b, pen));
    }

    fn circle(&mut self, c: Circle) {
        self.items.push(Item::Circle(c, Pen::Circle));
    }

    fn dot(&mut self, p: Point, label: &str) {
        self.items.push(Item::Dot(p, label.to_owned()));
    }

    fn bounds(&self) -> (f64, f64, f64, f64) {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut grow = |p: Point, r: f64| {
            x0 = x0.min(p.x - r);
            y0 = y0.min(p.y - r);
            x1 = x1.max(p.x + r);
            y1 = y1.max(p.y + r);
        };
        for item in &self.items {
            match item {
                Item::Polygon(pts, _) => pts.iter().for_each(|p| grow(*p, 0.0)),
                Item::Segment(a, b, _) => {
                    grow(*a, 0.0);
                    grow(*b, 0.0)
                }
                Item::Circle(c, _) => grow(c.center, c.radius()),
                Item::Dot(p, _) => grow(*p, 0.0),
            }
        }
        (x0, y0, x1, y1)
    }

    /// SVG 1.1 document; the view box is the bounding box grown by 10% on
    /// every side, with the y axis pointing up.
    fn render(&self, size: u32) -> Document {
        let (x0, y0, x1, y1) = self.bounds();
        let extent = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
        let margin = 0.1 * extent;
        let (w, h) = (x1 - x0 + 2.0 * margin, y1 - y0 + 2.0 * margin);
        let px = w / size as f64;
        let height = ((size as f64) * h / w).round().max(1.0) as u32;
        // a hundredth of a pixel is enough
        let decimals = (-(px / 100.0).log10()).ceil().max(0.0) as usize;
        let n = |v: f64| {
            let s = format!("{v:.decimals$}");
            match s.strip_prefix('-') {
                Some(rest) if rest.chars().all(|c| c == '0' || c == '.') => rest.to_owned(),
                _ => s,
            }
        };
        let stroke = |pen: Pen| match pen {
            Pen::Triangle => ("#000000", 2.0, None),
            Pen::Thin => ("#555555", 1.0, None),
            Pen::Dashed => ("#b03030", 1.0, Some(format!("{} {}", n(6.0 * px), n(4.0 * px)))),
            Pen::Circle => ("#2050c0", 1.5, None),
        };
        let styled = |el: svg::node::element::Element, pen: Pen| {
            let (color, width, dash) = stroke(pen);
            let mut el = el;
            el.assign("fill", "none");
            el.assign("stroke", color);
            el.assign("stroke-width", n(width * px));
            if let Some(d) = dash {
                el.assign("stroke-dasharray", d);
            }
            el
        };
        let mut shapes = Group::new();
        let mut marks = Group::new().set("fill", "#000000");
        let mut labels = Group::new()
            .set("font-family", "sans-serif")
            .set("font-size", n(12.0 * px));
        for item in &self.items {
            match item {
                Item::Polygon(pts, pen) => {
                    let coords = pts
                        .iter()
                        .map(|p| format!("{},{}", n(p.x), n(-p.y)))
                        .collect::<Vec<_>>()
                        .join(" ");
                    let el: svg::node::element::Element = Polygon::new().set("points", coords).into();
                    shapes = shapes.add(styled(el, *pen));
                }
                Item::Segment(a, b, pen) => {
                    let el: svg::node::element::Element = Line::new()
                        .set("x1", n(a.x))
                        .set("y1", n(-a.y))
                        .set("x2", n(b.x))
                        .set("y2", n(-b.y))
                        .into();
                    shapes = shapes.add(styled(el, *pen));
                }
                Item::Circle(c, pen) => {
                    let el: svg::node::element::Element = SvgCircle::new()
                        .set("cx", n(c.center.x))
                        .set("cy", n(-c.center.y))
                        .set("r", n(c.radius()))
                        .into();
                    shapes = shapes.add(styled(el, *pen));
                }
                Item::Dot(p, label) => {
                    marks = marks.add(
                        Ellipse::new()
                            .set("cx", n(p.x))
                            .set("cy", n(-p.y))
                            .set("rx", n(2.5 * px))
                            .set("ry", n(2.5 * px)),
                    );
                    labels = labels.add(
                        Text::new(label.clone())
                            .set("x", n(p.x + 4.0 * px))
                            .set("y", n(-p.y - 4.0 * px)),
                    );
                }
            }
        }
        Document::new()
            .set("version", "1.1")
            .set("width", size)
            .set("height", height)
            .set("viewBox", format!("{} {} {} {}", n(x0 - margin), n(-y1 - margin), n(w), n(h)))
            .add(shapes)
            .add(marks)
            .add(labels)
    }
}

const VERTEX_LABELS: [&str; 3] = ["A", "B", "C"];

fn base(scene: &Scene) -> Sketch {
    let mut s = Sketch::default();
    let vs = scene.triangle.vertices();
    s.polygon(vs, Pen::Triangle);
    for (v, l) in vs.iter().zip(VERTEX_LABELS) {
        s.dot(*v, l);
    }
    s
}

fn fig3(scene: &Scene) -> CliResult<Sketch> {
    let t = &scene.triangle;
    let mut s = base(scene);
    let i = incircle(t);
    s.circle(i.clone());
    s.dot(i.center, "I");
    let contact = contact_triangle(t);
    for (v, (f, l)) in t.vertices().iter().zip(contact.as_array().iter().zip(["D", "E", "F"])) {
        s.segment(*v, *f, Pen::Dashed);
        s.dot(*f, l);
    }
    s.dot(triangle_center(t, CenterKind::Gergonne), "Ge");
    Ok(s)
}

fn fig5(scene: &Scene) -> CliResult<Sketch> {
    let t = &scene.triangle;
    let p = match scene.point("P1") {
        Some(p) => p,
        None => t.from_barycentric([0.5, 0.3, 0.2]).expect("weights sum to one"),
    };
    let mut s = base(scene);
    let pedal = pedal_triangle(t, &p, &scene.tol)?;
    s.polygon(pedal.as_array(), Pen::Thin);
    for (f, l) in pedal.as_array().iter().zip(["A1", "B1", "C1"]) {
        s.segment(p, *f, Pen::Thin);
        s.dot(*f, l);
    }
    s.dot(p, "P");
    let q = isogonal_conjugate(t, &p, &scene.tol)?;
    // the perpendiculars from the vertices to the pedal sides meet at q
    for v in t.vertices() {
        s.segment(v, q, Pen::Dashed);
    }
    s.dot(q, "Q");
    Ok(s)
}

fn fig7(scene: &Scene) -> CliResult<Sketch> {
    let t = &scene.triangle;
    let p1 = scene
        .point("P1")
        .unwrap_or_else(|| triangle_center(t, CenterKind::Circumcenter));
    let p2 = match scene.point("P2") {
        Some(p) => p,
        None => isogonal_conjugate(t, &p1, &scene.tol)?,
    };
    let r = six_point_circle(t, &p1, &p2, &scene.tol)?;
    let mut s = base(scene);
    s.circle(Circle::from_radius(r.center, r.mean_radius()));
    let names = [["A1", "B1", "C1"], ["A2", "B2", "C2"]];
    for (point, (feet, labels)) in [p1, p2].iter().zip([r.feet1.as_array(), r.feet2.as_array()].iter().zip(names)) {
        for (f, l) in feet.iter().zip(labels) {
            s.segment(*point, *f, Pen::Dashed);
            s.dot(*f, l);
        }
    }
    s.dot(p1, "P1");
    s.dot(p2, "P2");
    s.dot(r.center, "M");
    Ok(s)
}

fn fig9(scene: &Scene) -> CliResult<Sketch> {
    let t = &scene.triangle;
    let p = scene
        .point("P1")
        .unwrap_or_else(|| triangle_center(t, CenterKind::Centroid));
    let feet = cevian_feet(t, &p)?;
    let r = terquem(t, &feet, &scene.tol)?;
    let mut s = base(scene);
    s.circle(r.circle.clone());
    for (v, ((f1, f2), (l1, l2))) in t.vertices().iter().zip(
        feet.as_array()
            .iter()
            .zip(r.second_feet.as_array().iter())
            .zip([("A1", "A2"), ("B1", "B2"), ("C1", "C2")]),
    ) {
        s.segment(*v, *f1, Pen::Thin);
        s.segment(*v, *f2, Pen::Dashed);
        s.dot(*f1, l1);
        s.dot(*f2, l2);
    }
    if let Some(f1) = r.f1_point() {
        s.dot(f1, "F1");
    }
    if let Some(f2) = r.f2_point() {
        s.dot(f2, "F2");
    }
    Ok(s)
}

fn fig10(scene: &Scene) -> CliResult<Sketch> {
    let t = &scene.triangle;
    let mut s = base(scene);
    let inc = incircle(t);
    let exc = excircle(t, Vertex::A);
    s.circle(inc.clone());
    s.circle(exc.clone());
    s.dot(inc.center, "I");
    s.dot(exc.center, "Ia");
    let a = t.vertex(Vertex::A);
    // the excircle touches the extensions of AB and AC
    for side in [Side::AB, Side::CA] {
        let touch = foot_of_perpendicular(&exc.center, &t.side_line(side));
        s.segment(a, touch, Pen::Thin);
    }
    s.dot(contact_triangle(t).on(Side::BC), "D");
    s.dot(extouch_triangle(t).on(Side::BC), "Da");
    Ok(s)
}

pub fn render(scene: &Scene, id: FigureId, size: u32) -> CliResult<String> {
    if size == 0 {
        return Err(CliError::Usage("--size must be positive".into()));
    }
    let sketch = match id {
        FigureId::Fig3Contact => fig3(scene)?,
        FigureId::Fig5Orthology => fig5(scene)?,
        FigureId::Fig7Sixpoint => fig7(scene)?,
        FigureId::Fig9Terquem => fig9(scene)?,
        FigureId::Fig10Excircle => fig10(scene)?,
    };
    Ok(format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n{}\n",
        sketch.render(size)
    ))
}
