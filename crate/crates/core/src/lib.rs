//! Plane triangle geometry: a tolerance-aware kernel, classical
//! constructions (centers, pedal/contact/extouch triangles, isogonal and
//! isotomic conjugates), relations between triangles (Ceva, Carnot,
//! homology, orthology, the six-point circle, Terquem points) and a seeded
//! harness that checks the classical theorems on random inputs.
//!
//! Everything is generic over the scalar type. The aliases below fix it to
//! `f64`; `F32*` and `Exact*` variants cover `f32` and exact rationals.
//!
//! ```
//! use orthocevia::{CenterKind, Point, Triangle};
//!
//! let t = Triangle::new(Point::new(0., 0.), Point::new(4., 0.), Point::new(0., 3.)).unwrap();
//! let i = orthocevia::constructions::triangle_center(&t, CenterKind::Incenter);
//! assert!((i.x - 1.).abs() < 1e-12 && (i.y - 1.).abs() < 1e-12);
//! ```

pub mod constructions;
pub mod error;
pub mod json;
pub mod kernel;
pub mod relations;
pub mod scalar;
pub mod verify;

pub use constructions::CenterKind;
pub use error::{GeometryError, VerifyError};

use num_rational::BigRational;

pub type Point = kernel::Point<f64>;
pub type Line = kernel::Line<f64>;
pub type Circle = kernel::Circle<f64>;
pub type Tolerance = kernel::Tolerance<f64>;
pub type Triangle = constructions::Triangle<f64>;
pub type CevianFeet = constructions::CevianFeet<f64>;

pub type F32Point = kernel::Point<f32>;
pub type F32Triangle = constructions::Triangle<f32>;
pub type F32Tolerance = kernel::Tolerance<f32>;

pub type Rational = BigRational;
pub type ExactPoint = kernel::Point<BigRational>;
pub type ExactLine = kernel::Line<BigRational>;
pub type ExactCircle = kernel::Circle<BigRational>;
pub type ExactTolerance = kernel::Tolerance<BigRational>;
