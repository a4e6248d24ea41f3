use thiserror::Error;

/// Errors raised across the toolkit.
///
/// Construction failures carry the stage that failed so callers (and the CLI)
/// can report where the pipeline stopped.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("target degree {target} is below the polynomial degree {degree}")]
    DegreeTooLow { target: u32, degree: u32 },

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("not a projective point: all coordinates vanish")]
    ZeroPoint,

    #[error("matrix of size {size} exceeds the configured bound {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("polynomial vanishes at the base point")]
    VanishesAtBasePoint,

    #[error("endpoint {0} is a root")]
    EndpointIsRoot(String),

    #[error("operation needs exact coefficients")]
    NeedsExactMode,

    #[error("exact real-root isolation needs real coefficients")]
    NonRealCoefficients,

    #[error("index {index} out of range 0..{len}")]
    OutOfRange { index: usize, len: usize },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("polynomials share a common factor")]
    NotRelativelyPrime,

    #[error("curve is singular or reducible: {0}")]
    SingularCurve(String),

    #[error("intersection points not in general position after {0} attempts")]
    GeneralPosition(usize),

    #[error("real intersection point with odd multiplicity {0}: interlacer is not a real contact curve")]
    OddRealMultiplicity(u32),

    #[error("contact order {0} above 2 is not supported")]
    HigherContact(u32),

    #[error("divisor has degree {got}, expected {expected}")]
    DivisorDegree { expected: u32, got: u32 },

    #[error("linear system of forms has dimension {got}, expected {expected}")]
    BasisDimension { expected: usize, got: usize },

    #[error("linear solve failed: {0}")]
    Solve(String),

    #[error("determinant of the adjoint matrix vanishes identically")]
    DegenerateAdjoint,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("pencil is indefinite at the base point: interlacer invalid")]
    IndefiniteBasePoint,

    #[error("exact normalization would need an irrational scaling; use float mode")]
    IrrationalScaling,

    #[error("intersection points are not Gaussian rationals; use float mode")]
    ExactRecovery,

    #[error("input is not real-zero at the base point: {0}")]
    NotRealZero(String),

    #[error("{0}")]
    Precondition(String),

    #[error("retries exhausted: {0}")]
    RetriesExhausted(String),

    #[error("construction failed at stage `{stage}` after {attempts} attempt(s): {source}")]
    Stage {
        stage: &'static str,
        attempts: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
