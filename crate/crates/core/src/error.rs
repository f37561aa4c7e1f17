use thiserror::Error;

/// Everything that can go wrong in a construction or predicate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("invalid tolerance: rel_eps must be > 0 and abs_floor >= 0")]
    InvalidTolerance,
    #[error("degenerate input: points coincide at tolerance")]
    DegenerateInput,
    #[error("lines coincide; intersection is not a single point")]
    CoincidentLines,
    #[error("points are collinear")]
    CollinearPoints,
    #[error("formula produced a negative value ({0:e}); inputs are not realizable")]
    NegativeResult(f64),
    #[error("degenerate triangle: 2*area/max_side^2 = {ratio:e} is below {threshold:e}")]
    DegenerateTriangle { ratio: f64, threshold: f64 },
    #[error("point lies on the circumcircle; its pedal triangle degenerates to a line")]
    PedalDegenerate,
    #[error("point lies on a side line of the triangle")]
    OnSideLine,
    #[error("conjugate point is at infinity")]
    ConjugateAtInfinity,
    #[error("cevian through the point is parallel to the opposite side")]
    CevianParallel,
    #[error("point is not on the expected side line")]
    FootOffCarrier,
    #[error("cevian foot coincides with a vertex")]
    FootAtVertex,
    #[error("reflected cevian is parallel to the side line")]
    ReflectedCevianParallel,
    #[error("corresponding vertices coincide")]
    CoincidentVertexPair,
    #[error("the two points are not an isogonal pair")]
    NotIsogonalPair,
    #[error("input cevians are not concurrent (ceva product {0})")]
    NotConcurrentInput(f64),
    #[error("circle through the feet misses a side line")]
    CircleMissesSide,
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;

/// Failures of the verification harness itself, as opposed to a failing
/// trial.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("sampling exhausted after {0} rejections; configuration is too strict")]
    SamplingExhausted(usize),
    #[error("invalid suite configuration: {0}")]
    InvalidConfig(&'static str),
}
