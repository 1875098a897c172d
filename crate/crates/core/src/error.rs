use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("variable {0} absent from polynomial")]
    VariableAbsent(&'static str),

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("degenerate degree: leading coefficient vanishes identically")]
    DegenerateDegree,

    #[error("not solvable by this module: degree {0} exceeds 4")]
    UnsolvableDegree(usize),

    #[error("curve polynomial is constant")]
    ConstantCurve,

    #[error("curve polynomial is not squarefree")]
    NotSquarefree,

    #[error("curve is reducible over the rationals: {0}")]
    Reducible(String),

    #[error("could not certify irreducibility of the curve polynomial")]
    IrreducibilityUnknown,

    #[error("non-ordinary singularity at family with residue {residue} and multiplicity {multiplicity}")]
    NonOrdinary { residue: String, multiplicity: usize },

    #[error("genus undefined here: curve has a non-ordinary singularity and is degenerate for the polygon count")]
    GenusUnavailable,

    #[error("point does not lie on the curve")]
    PointNotOnCurve,

    #[error("could not sample simple points")]
    SampleExhausted,

    #[error("partial degree {0} out of range for solving by radicals")]
    PartialDegreeOutOfRange(usize),

    #[error("no rational point of multiplicity d-r with 1 <= r <= 4")]
    NoHighMultiplicityPoint,

    #[error("point family is not rational; lines method needs a rational point")]
    NonRationalPoint,

    #[error("multiplicity {found} out of range [{low}, {high}] for the lines method")]
    MultiplicityOutOfRange { found: usize, low: usize, high: usize },

    #[error("adjoint conditions dependent (assumptions violated): expected projective dimension {expected}, got {got}")]
    AdjointDimensionMismatch { expected: i64, got: i64 },

    #[error("pencil produced out-of-range free intersections (delta_{axis} = {delta}); resample points")]
    FreeIntersectionRange { axis: usize, delta: usize },

    #[error("pairing failed: root {index} of R1 has no partner at maximum precision")]
    PairingFailed { index: usize },

    #[error("no partner roots (inconsistent pencil)")]
    NoPartnerRoots,

    #[error("evaluation failed at a {node} node")]
    EvalFailure { node: &'static str },

    #[error("degenerate part {0}: derivative vanishes identically")]
    DegeneratePart(usize),

    #[error("part {0} is identically equal to the focus")]
    PartAtFocus(usize),

    #[error("no applicable method: genus > 4 and no high-multiplicity point")]
    NoMethod,

    #[error("retries exhausted: {0}")]
    RetriesExhausted(String),

    #[error("invalid expression: {0}")]
    InvalidExpression(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
