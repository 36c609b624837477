use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point sign is undefined at the origin")]
    DegenerateOrigin,

    #[error("angle triple direction must be finite and nonzero, got ({x}, {y})")]
    InvalidTriple { x: f64, y: f64 },

    /// The sum of two triples rounded to the zero vector.
    #[error("triple addition produced the zero vector (near-opposite operands)")]
    DegenerateSum,

    #[error("exponent range exceeded while rescaling ({x:e}, {y:e})")]
    ExponentRange { x: f64, y: f64 },

    #[error("degenerate segment pair: an endpoint of one segment coincides with an endpoint of the other")]
    DegenerateSegments,

    #[error("intersection detected between segments")]
    IntersectionDetected,

    #[error("curve has {len} vertices, at least 3 are required")]
    CurveTooSmall { len: usize },

    #[error("consecutive vertices {index} and {next} coincide")]
    RepeatedVertex { index: usize, next: usize },

    #[error("non-finite coordinate in vertex {index}")]
    NonFiniteVertex { index: usize },

    #[error("chain is not closed: nonzero boundary at point {point}")]
    NotClosed { point: usize },

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("no generic projection direction found after {attempts} attempts")]
    NonGenericDirection { attempts: usize },

    #[error("curve {0:?} not found")]
    UnknownCurve(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
