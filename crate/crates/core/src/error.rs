use thiserror::Error;

/// Errors raised across the toolkit. Each variant maps onto a stable
/// kebab-case name (see [`Error::name`]) that the CLI prints on failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported degree {0} (at most 5 is supported)")]
    UnsupportedDegree(usize),
    #[error("derivative vanishes at the evaluation point")]
    DerivativeVanishes,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("region boundary undecidable at maximum refinement: {0}")]
    BoundaryAmbiguous(String),
    #[error("enumeration of {size} polynomials exceeds budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("strips are degenerate (d1 = d2)")]
    DegenerateStrips,
    #[error("invalid region: {0}")]
    InvalidRegion(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("invalid gamma: {0}")]
    InvalidGamma(String),
    #[error("weights must satisfy v1 + v2 = 1, got {0} + {1}")]
    InvalidWeights(String, String),
    #[error("level {level} outside [1, {max}]")]
    InvalidLevel { level: usize, max: usize },
    #[error("target lies in the exceptional set: {0}")]
    TargetInExceptionalSet(String),
    #[error("no independent family found within slack {0}")]
    SlackExhausted(String),
    #[error("degenerate target: x1 = x2")]
    DegenerateTarget,
    #[error("internal error: {0}")]
    Internal(String),
    #[error("target unconstructible after {0} attempts (exceptional set at every delta)")]
    UnconstructibleTarget(usize),
    #[error("construction failed: bound {0} violated after all retries")]
    ConstructionFailed(String),
    #[error("cannot fit exponent: zero count present at Q = {0}")]
    CannotFitZeroCounts(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::UnsupportedDegree(_) => "unsupported-degree",
            Error::DerivativeVanishes => "derivative-vanishes",
            Error::NotSquarefree => "not-squarefree",
            Error::BoundaryAmbiguous(_) => "boundary-ambiguous",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::DegenerateStrips => "degenerate-strips",
            Error::InvalidRegion(_) => "invalid-region",
            Error::InvalidCurve(_) => "invalid-curve",
            Error::InvalidGamma(_) => "invalid-gamma",
            Error::InvalidWeights(..) => "invalid-weights",
            Error::InvalidLevel { .. } => "invalid-level",
            Error::TargetInExceptionalSet(_) => "target-in-exceptional-set",
            Error::SlackExhausted(_) => "slack-exhausted",
            Error::DegenerateTarget => "degenerate-target",
            Error::Internal(_) => "internal-error",
            Error::UnconstructibleTarget(_) => "unconstructible-target",
            Error::ConstructionFailed(_) => "construction-failed",
            Error::CannotFitZeroCounts(_) => "cannot-fit-zero-counts",
            Error::Io(_) => "io-error",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
