use thiserror::Error;

/// Errors for operations whose preconditions can fail.
///
/// Predicate failures (a hypothesis that does not hold, a sequence that is
/// not a Sturm sequence, ...) are *results*, not errors; errors are reserved
/// for inputs outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not exactly divisible by the divisor")]
    NotDivisible,
    #[error("interval does not isolate exactly one root (contains {found})")]
    NotIsolating { found: usize },
    #[error("{which} is not real-rooted")]
    NotRealRooted { which: &'static str },
    #[error(
        "sequence entry {index} is not standard (zero or positive leading coefficient required)"
    )]
    NonStandardEntry { index: usize },
    #[error("expected {expected} multiplier polynomials, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),
    #[error("coefficient at degree {index} must be positive")]
    NonPositiveCoefficient { index: usize },
    #[error("enumeration size {n} exceeds the hard cap {cap}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("graph error: {0}")]
    Graph(String),
    #[error("matrix shape error: {0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
