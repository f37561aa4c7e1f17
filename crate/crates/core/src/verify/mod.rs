//! Seeded randomized suites, one per theorem, with JSON-serializable reports.
//!
//! Every trial draws from its own `ChaCha8` stream keyed by
//! `(seed, trial_index)`, so reports are identical however the trials are
//! scheduled. Trials run on the rayon pool and are reduced in index order.

mod sampling;
mod suites;

use std::collections::BTreeMap;

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::Triangle;
use crate::error::{GeometryError, VerifyError};
use crate::kernel::{Point, Tolerance};

pub use sampling::{
    is_near_equilateral, sample_acute_triangle, sample_interior_point, sample_on_segment, sample_point, sample_triangle,
    trial_rng, ACUTE_MARGIN, MAX_REJECTIONS,
};
pub use suites::{suite_names, SuiteId};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    pub tolerance: Tolerance<f64>,
    /// Minimum `2 * area / max_side^2` of sampled triangles.
    pub min_area_ratio: f64,
    /// Minimum barycentric coordinate of sampled interior points.
    pub interior_margin: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            trials: 1000,
            seed: 0,
            tolerance: Tolerance::default(),
            min_area_ratio: 0.05,
            interior_margin: 0.05,
        }
    }
}

impl SuiteConfig {
    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.trials == 0 {
            return Err(VerifyError::InvalidConfig("trials must be at least 1"));
        }
        if !(self.interior_margin > 0.0 && self.interior_margin < 1.0 / 3.0) {
            return Err(VerifyError::InvalidConfig("interior_margin must lie in (0, 1/3)"));
        }
        if !(0.0..1.0).contains(&self.min_area_ratio) {
            return Err(VerifyError::InvalidConfig("min_area_ratio must lie in [0, 1)"));
        }
        if !(self.tolerance.rel_eps > 0.0 && self.tolerance.abs_floor >= 0.0) {
            return Err(VerifyError::InvalidConfig("tolerance must have rel_eps > 0 and abs_floor >= 0"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// Residual: passes when `value <= bound`.
    AtMost,
    /// Separation: passes when `value > bound`.
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub value: f64,
    pub bound: f64,
    pub kind: Bound,
}

impl Check {
    pub fn passed(&self) -> bool {
        match self.kind {
            Bound::AtMost => self.value <= self.bound,
            Bound::AtLeast => self.value > self.bound,
        }
    }
}

/// Exact inputs of a trial, in the same shape as a CLI scene file so a
/// failing trial can be replayed directly.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct TrialInputs {
    pub triangle: Vec<[f64; 2]>,
    pub points: BTreeMap<String, [f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialReport {
    pub trial_index: u64,
    pub inputs: TrialInputs,
    pub residuals: BTreeMap<String, Check>,
    /// Boolean claims that must hold.
    pub predicates: BTreeMap<String, bool>,
    /// Recorded measurements with no pass/fail meaning.
    pub observations: BTreeMap<String, f64>,
    /// Events counted across the suite and judged by frequency.
    pub tallies: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub skipped: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TallySummary {
    pub hits: usize,
    pub total: usize,
    pub fraction: f64,
    pub required: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: SuiteConfig,
    pub trials: usize,
    pub skipped: usize,
    pub failures: Vec<TrialReport>,
    /// Largest value seen per `AtMost` check.
    pub max_residuals: BTreeMap<String, f64>,
    /// Smallest value seen per `AtLeast` check.
    pub min_separations: BTreeMap<String, f64>,
    pub tallies: BTreeMap<String, TallySummary>,
    pub passed: bool,
}

/// What a suite body can fail with. Geometry errors fail the trial;
/// sampling errors abort the run.
#[derive(Debug)]
pub(crate) enum TrialAbort {
    Geometry(GeometryError),
    Harness(VerifyError),
}

impl From<GeometryError> for TrialAbort {
    fn from(e: GeometryError) -> Self {
        TrialAbort::Geometry(e)
    }
}

impl From<VerifyError> for TrialAbort {
    fn from(e: VerifyError) -> Self {
        TrialAbort::Harness(e)
    }
}

/// Mutable state handed to a suite body for one trial.
pub(crate) struct Trial<'a> {
    pub config: &'a SuiteConfig,
    pub rng: ChaCha8Rng,
    report: TrialReport,
}

impl<'a> Trial<'a> {
    fn new(config: &'a SuiteConfig, index: u64) -> Self {
        Self {
            config,
            rng: trial_rng(config.seed, index),
            report: TrialReport {
                trial_index: index,
                inputs: TrialInputs::default(),
                residuals: BTreeMap::new(),
                predicates: BTreeMap::new(),
                observations: BTreeMap::new(),
                tallies: BTreeMap::new(),
                error: None,
                skipped: false,
                passed: false,
            },
        }
    }

    pub fn eps(&self) -> f64 {
        self.config.tolerance.rel_eps
    }

    pub fn tol(&self) -> &Tolerance<f64> {
        &self.config.tolerance
    }

    pub fn triangle(&mut self, t: &Triangle<f64>) {
        self.report.inputs.triangle = t.vertices().iter().map(|p| [p.x, p.y]).collect();
    }

    pub fn point(&mut self, name: &str, p: &Point<f64>) {
        self.report.inputs.points.insert(name.to_owned(), [p.x, p.y]);
    }

    pub fn at_most(&mut self, name: &str, value: f64, bound: f64) {
        self.check(name, value, bound, Bound::AtMost);
    }

    pub fn at_least(&mut self, name: &str, value: f64, bound: f64) {
        self.check(name, value, bound, Bound::AtLeast);
    }

    fn check(&mut self, name: &str, value: f64, bound: f64, kind: Bound) {
        let check = Check { value, bound, kind };
        // repeated names keep the worst value
        let keep = match self.report.residuals.get(name) {
            None => true,
            Some(old) => !check.passed() || (old.passed() && worse(&check, old)),
        };
        if keep {
            self.report.residuals.insert(name.to_owned(), check);
        }
    }

    pub fn predicate(&mut self, name: &str, holds: bool) {
        let entry = self.report.predicates.entry(name.to_owned()).or_insert(true);
        *entry &= holds;
    }

    pub fn observe(&mut self, name: &str, value: f64) {
        self.report.observations.insert(name.to_owned(), value);
    }

    pub fn tally(&mut self, name: &str, hit: bool) {
        self.report.tallies.insert(name.to_owned(), hit);
    }

    pub fn skip(&mut self) {
        self.report.skipped = true;
    }
}

fn worse(new: &Check, old: &Check) -> bool {
    match new.kind {
        Bound::AtMost => new.value > old.value,
        Bound::AtLeast => new.value < old.value,
    }
}

fn run_trial(id: SuiteId, config: &SuiteConfig, index: u64) -> Result<TrialReport, VerifyError> {
    let mut trial = Trial::new(config, index);
    match id.body()(&mut trial) {
        Ok(()) => {}
        Err(TrialAbort::Geometry(e)) => trial.report.error = Some(e.to_string()),
        Err(TrialAbort::Harness(e)) => return Err(e),
    }
    let mut report = trial.report;
    report.passed = report.error.is_none()
        && report.residuals.values().all(Check::passed)
        && report.predicates.values().all(|&b| b);
    Ok(report)
}

/// Runs the named suite. Fails only for an unknown name, an invalid
/// configuration or a sampler that cannot satisfy the configuration; failing
/// trials are reported, not returned as errors.
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<SuiteReport, VerifyError> {
    let id: SuiteId = name.parse()?;
    config.validate()?;
    let reports = (0..config.trials as u64)
        .into_par_iter()
        .map(|i| run_trial(id, config, i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(assemble(id, config, reports))
}

fn assemble(id: SuiteId, config: &SuiteConfig, reports: Vec<TrialReport>) -> SuiteReport {
    let mut max_residuals = BTreeMap::new();
    let mut min_separations = BTreeMap::new();
    let mut counts: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut skipped = 0;
    for report in reports {
        if report.skipped {
            skipped += 1;
            continue;
        }
        for (name, check) in &report.residuals {
            let (map, better): (&mut BTreeMap<String, f64>, fn(f64, f64) -> bool) = match check.kind {
                Bound::AtMost => (&mut max_residuals, |new, old| new > old || new.is_nan()),
                Bound::AtLeast => (&mut min_separations, |new, old| new < old || new.is_nan()),
            };
            map.entry(name.clone())
                .and_modify(|v| {
                    if better(check.value, *v) {
                        *v = check.value
                    }
                })
                .or_insert(check.value);
        }
        for (name, &hit) in &report.tallies {
            let c = counts.entry(name.clone()).or_default();
            c.0 += hit as usize;
            c.1 += 1;
        }
        if !report.passed {
            failures.push(report);
        }
    }
    let mut tallies = BTreeMap::new();
    for &(name, required) in id.tally_requirements() {
        let (hits, total) = counts.remove(name).unwrap_or((0, 0));
        let fraction = if total == 0 { 0.0 } else { hits as f64 / total as f64 };
        tallies.insert(
            name.to_owned(),
            TallySummary {
                hits,
                total,
                fraction,
                required,
                passed: total > 0 && fraction >= required,
            },
        );
    }
    // tallies without a requirement are reported for information
    for (name, (hits, total)) in counts {
        let fraction = if total == 0 { 0.0 } else { hits as f64 / total as f64 };
        tallies.insert(
            name,
            TallySummary {
                hits,
                total,
                fraction,
                required: 0.0,
                passed: true,
            },
        );
    }
    let passed = failures.is_empty() && tallies.values().all(|t| t.passed);
    SuiteReport {
        suite: id.name().to_owned(),
        config: config.clone(),
        trials: config.trials,
        skipped,
        failures,
        max_residuals,
        min_separations,
        tallies,
        passed,
    }
}
