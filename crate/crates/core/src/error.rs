use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("step set must contain the down step -1")]
    MissingDownStep,
    #[error("illegal step {0}: -1 is the only negative step allowed")]
    IllegalStep(i64),
    #[error("the step set {{-1, 0}} is degenerate and not supported")]
    DegenerateSet,
    #[error("step set has no non-negative step")]
    EmptyUps,
    #[error("cannot parse step set from {0:?}")]
    StepSetSyntax(String),

    #[error("argument must be positive")]
    NonPositiveArgument,
    #[error("derivative order {0} is not supported (0..=4)")]
    UnsupportedOrder(u32),
    #[error("ascent length must be at least 1")]
    ZeroAscentLength,

    #[error("dispersed excursions need a step set without the horizontal step 0")]
    DispersedNeedsNoZeroStep,
    #[error("the path family is empty for this length")]
    EmptyFamily,
    #[error("length {n} exceeds the brute force cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("root finder did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("length {n} is not a multiple of the period {period}")]
    PeriodMismatch { n: usize, period: u32 },
    #[error("step set has tau = 1; use the Dyck or Motzkin special case")]
    TauIsOne,
    #[error("no asymptotic formula for the {0}")]
    NoFormula(&'static str),

    #[error("number of trials must be positive")]
    ZeroTrials,
    #[error("at least {min} trials are required, got {got}")]
    TooFewTrials { min: usize, got: usize },

    #[error("path does not belong to the {0} family over the step set")]
    InvalidPath(crate::path::PathKind),
    #[error("path is not an excursion over the step set")]
    NotAnExcursion,
    #[error("node outdegree {0} is not allowed by the step set")]
    IllegalOutdegree(usize),
    #[error("cannot parse {what}: {detail}")]
    Syntax { what: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
