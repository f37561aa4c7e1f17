use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use orthocevia::{CenterKind, GeometryError, Point, Tolerance, Triangle};
use serde::Deserialize;

/// A failure mapped to a process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, unreadable input, unknown names. Exit 2.
    Usage(String),
    /// The triangle fails the degeneracy check. Exit 3.
    Degenerate(String),
    /// A construction's precondition does not hold. Exit 4.
    Precondition(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Degenerate(_) => 3,
            CliError::Precondition(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Degenerate(m) => write!(f, "degenerate input: {m}"),
            CliError::Precondition(m) => write!(f, "precondition failed: {m}"),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::DegenerateTriangle { .. } => CliError::Degenerate(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Deserialize)]
struct SceneFile {
    triangle: Vec<[f64; 2]>,
    #[serde(default)]
    points: BTreeMap<String, [f64; 2]>,
}

pub struct Scene {
    pub triangle: Triangle,
    pub points: BTreeMap<String, Point>,
    pub tol: Tolerance,
}

fn number(s: &str) -> CliResult<f64> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("`{s}` is not a decimal number")))?;
    if !x.is_finite() {
        return Err(CliError::Usage(format!("`{s}` is not finite")));
    }
    Ok(x)
}

/// `x,y`.
pub fn parse_pair(s: &str) -> CliResult<Point> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("expected `x,y`, got `{s}`")))?;
    Ok(Point::new(number(x)?, number(y)?))
}

/// `"ax,ay bx,by cx,cy"`.
pub fn parse_triangle(s: &str) -> CliResult<[Point; 3]> {
    let pts = s.split_whitespace().map(parse_pair).collect::<CliResult<Vec<_>>>()?;
    pts.try_into()
        .map_err(|_| CliError::Usage(format!("expected three points `ax,ay bx,by cx,cy`, got `{s}`")))
}

fn finite(name: &str, [x, y]: [f64; 2]) -> CliResult<Point> {
    if x.is_finite() && y.is_finite() {
        Ok(Point::new(x, y))
    } else {
        Err(CliError::Usage(format!("point `{name}` is not finite")))
    }
}

/// Tolerance from `--eps`, else `ORTHOCEVIA_EPS`, else the default.
pub fn tolerance(eps: Option<f64>) -> CliResult<Tolerance> {
    let default = Tolerance::default();
    let eps = match eps {
        Some(e) => Some(e),
        None => match std::env::var("ORTHOCEVIA_EPS") {
            Ok(v) => Some(number(&v).map_err(|_| CliError::Usage(format!("ORTHOCEVIA_EPS=`{v}` is not a number")))?),
            Err(_) => None,
        },
    };
    match eps {
        None => Ok(default),
        Some(e) => Tolerance::new(e, default.abs_floor)
            .map_err(|_| CliError::Usage(format!("tolerance must be positive, got {e}"))),
    }
}

pub fn load(
    triangle: Option<&str>,
    scene: Option<&Path>,
    fallback: Option<[Point; 3]>,
    eps: Option<f64>,
) -> CliResult<Scene> {
    let tol = tolerance(eps)?;
    let (vertices, points) = match (triangle, scene) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give either --triangle or --scene, not both".into())),
        (Some(t), None) => (parse_triangle(t)?, BTreeMap::new()),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let file: SceneFile = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("invalid scene {}: {e}", path.display())))?;
            let vertices: [Point; 3] = file
                .triangle
                .iter()
                .enumerate()
                .map(|(i, &p)| finite(&format!("triangle[{i}]"), p))
                .collect::<CliResult<Vec<_>>>()?
                .try_into()
                .map_err(|_| CliError::Usage("scene triangle must have exactly three points".into()))?;
            let points = file
                .points
                .into_iter()
                .map(|(k, v)| finite(&k, v).map(|p| (k, p)))
                .collect::<CliResult<BTreeMap<_, _>>>()?;
            (vertices, points)
        }
        (None, None) => match fallback {
            Some(v) => (v, BTreeMap::new()),
            None => return Err(CliError::Usage("missing --triangle or --scene".into())),
        },
    };
    let [a, b, c] = vertices;
    let triangle = Triangle::new(a, b, c)?;
    Ok(Scene { triangle, points, tol })
}

impl Scene {
    /// Applies `NAME=x,y` or `NAME=ref` bindings, where `ref` names a scene
    /// point or a triangle center.
    pub fn bind(&mut self, specs: &[String]) -> CliResult<()> {
        for spec in specs {
            let (name, value) = spec
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("expected NAME=x,y or NAME=center, got `{spec}`")))?;
            let p = self.resolve(value)?;
            self.points.insert(name.trim().to_owned(), p);
        }
        Ok(())
    }

    fn resolve(&self, value: &str) -> CliResult<Point> {
        if value.contains(',') {
            return parse_pair(value);
        }
        if let Some(p) = self.points.get(value) {
            return Ok(*p);
        }
        match value.parse::<CenterKind>() {
            Ok(kind) => Ok(orthocevia::constructions::triangle_center(&self.triangle, kind)),
            Err(_) => Err(CliError::Usage(format!("`{value}` is neither a point, a scene point nor a center name"))),
        }
    }

    pub fn point(&self, name: &str) -> Option<Point> {
        self.points.get(name).copied()
    }

    pub fn require(&self, name: &str) -> CliResult<Point> {
        self.point(name)
            .ok_or_else(|| CliError::Usage(format!("this command needs point {name} (use --point {name}=x,y)")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangles() {
        let [a, b, c] = parse_triangle("0,0 4,0  0,3").unwrap();
        assert_eq!((a, b, c), (Point::new(0., 0.), Point::new(4., 0.), Point::new(0., 3.)));
        assert!(parse_triangle("0,0 4,0").is_err());
        assert!(parse_triangle("0,0 4,x 0,3").is_err());
        assert!(parse_triangle("0,0 4,inf 0,3").is_err());
        assert!(parse_triangle("1+1,0 4,0 0,3").is_err());
    }

    #[test]
    fn degenerate_maps_to_three() {
        let err = load(Some("0,0 1,1 2,2"), None, None, None).err().unwrap();
        assert_eq!(err.code(), 3);
        assert!(err.to_string().contains("2*area/max_side^2"));
    }

    #[test]
    fn binds_points() {
        let mut scene = load(Some("0,0 4,0 0,3"), None, None, None).unwrap();
        scene
            .bind(&["P1=incenter".into(), "Q=1.5,2".into(), "R=Q".into()])
            .unwrap();
        assert_eq!(scene.point("P1"), Some(Point::new(1., 1.)));
        assert_eq!(scene.point("R"), Some(Point::new(1.5, 2.)));
        assert_eq!(scene.bind(&["X=nowhere".into()]).unwrap_err().code(), 2);
    }
}
