use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SuiteConfig;
use crate::constructions::{Triangle, DEGENERACY_THRESHOLD};
use crate::error::VerifyError;
use crate::kernel::Point;

/// Rejections allowed before a sampler gives up.
pub const MAX_REJECTIONS: usize = 1000;

/// Vertex-angle cosine floor for acute-only suites.
pub const ACUTE_MARGIN: f64 = 0.05;

/// Independent stream for one trial. The same `(seed, trial_index)` always
/// yields the same sequence, whatever order trials run in.
pub fn trial_rng(seed: u64, trial_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial_index);
    rng
}

pub fn sample_point<G: Rng + ?Sized>(rng: &mut G, half_width: f64) -> Point<f64> {
    Point::new(
        rng.random_range(-half_width..=half_width),
        rng.random_range(-half_width..=half_width),
    )
}

/// Vertices uniform in `[-1, 1]^2`, resampled until the area ratio reaches
/// `config.min_area_ratio`.
pub fn sample_triangle<G: Rng + ?Sized>(rng: &mut G, config: &SuiteConfig) -> Result<Triangle<f64>, VerifyError> {
    sample_triangle_where(rng, config, |_| true)
}

/// Like [`sample_triangle`] but also requires every vertex-angle cosine to
/// exceed [`ACUTE_MARGIN`].
pub fn sample_acute_triangle<G: Rng + ?Sized>(rng: &mut G, config: &SuiteConfig) -> Result<Triangle<f64>, VerifyError> {
    sample_triangle_where(rng, config, |t| t.is_acute_with(ACUTE_MARGIN))
}

fn sample_triangle_where<G: Rng + ?Sized>(
    rng: &mut G,
    config: &SuiteConfig,
    accept: impl Fn(&Triangle<f64>) -> bool,
) -> Result<Triangle<f64>, VerifyError> {
    let threshold = config.min_area_ratio.max(DEGENERACY_THRESHOLD);
    for _ in 0..MAX_REJECTIONS {
        let (a, b, c) = (sample_point(rng, 1.0), sample_point(rng, 1.0), sample_point(rng, 1.0));
        if let Ok(t) = Triangle::with_threshold(a, b, c, threshold) {
            if accept(&t) {
                return Ok(t);
            }
        }
    }
    Err(VerifyError::SamplingExhausted(MAX_REJECTIONS))
}

/// A point whose barycentric coordinates are each at least `margin`,
/// uniform over that inner triangle.
///
/// # Panics
/// If `margin` is outside `(0, 1/3]`.
pub fn sample_interior_point<G: Rng + ?Sized>(rng: &mut G, t: &Triangle<f64>, margin: f64) -> Point<f64> {
    assert!(margin > 0.0 && margin <= 1.0 / 3.0, "margin must lie in (0, 1/3]");
    let mut cuts = [rng.random::<f64>(), rng.random::<f64>()];
    cuts.sort_by(f64::total_cmp);
    let free = 1.0 - 3.0 * margin;
    let w = [cuts[0], cuts[1] - cuts[0], 1.0 - cuts[1]].map(|u| margin + free * u);
    t.from_barycentric(w).expect("weights sum to one")
}

/// A point on the open side segment from `p` to `q`, at least `margin` of
/// the side length away from either end.
pub fn sample_on_segment<G: Rng + ?Sized>(rng: &mut G, p: &Point<f64>, q: &Point<f64>, margin: f64) -> Point<f64> {
    let s = rng.random_range(margin..=1.0 - margin);
    *p + (*q - *p) * s
}

/// Nearly equilateral: the spread of side lengths is within `eps` of the
/// longest side.
pub fn is_near_equilateral(t: &Triangle<f64>, eps: f64) -> bool {
    let sides = [t.a(), t.b(), t.c()];
    let min = sides.iter().copied().fold(f64::INFINITY, f64::min);
    (t.max_side() - min) <= eps * t.max_side()
}
