//! Theorem-level predicates: Ceva, Steiner and Carnot sums, homology and
//! orthology of triangle pairs, the six-point circle of an isogonal pair,
//! the Terquem construction and the orthohomological pedal pipeline.

mod circles;
mod perspective;
mod ratios;

pub use circles::{
    orthohomological_pedal_check, six_point_circle, six_point_radius_at, six_point_radius_formula,
    six_point_spread, terquem, PedalCheckReport, SixPointResult, TerquemResult,
};
pub use perspective::{
    homology, is_bilogical, is_orthohomological, lines_concurrency, orthology, OrthologyResult,
    PerspectivityResult,
};
pub use ratios::{carnot_sum, ceva_product, steiner_check};
