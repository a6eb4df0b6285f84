use thiserror::Error;

/// Errors raised by the algorithms of this crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("trace criterion violated: {0}")]
    CriterionViolation(String),
    #[error("not in the centralizer: {0}")]
    NotInCentralizer(String),
    #[error("invalid witness: {0}")]
    WitnessInvalid(String),
    #[error("no regularity certificate: {0}")]
    NotCertified(String),
    #[error("not applicable{}: {reason}", prime.as_ref().map(|p| format!(" at prime {p}")).unwrap_or_default())]
    NotApplicable { prime: Option<String>, reason: String },
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("descent stuck: {0}")]
    DescentStuck(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
