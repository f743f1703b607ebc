//! Error type shared across the crate.

use thiserror::Error;

/// Errors surfaced by fallible operations.
///
/// Internal invariants that can only break through a bug (exact divisions
/// certified by theory, basis bijectivity) panic instead; everything a caller
/// can trigger with legitimate input goes through this enum.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Inversion of an element whose square norm `f^2 - g^2` vanishes.
    /// Such elements are zero divisors of `Q(q)[p]/(p^2-1)`.
    #[error("zero divisor: the specialization p -> {vanishing_at} vanishes, element is not invertible")]
    ZeroDivisor { vanishing_at: i8 },

    /// Division by zero in the rational function field.
    #[error("division by zero rational function")]
    DivisionByZero,

    /// Text input that does not match the expected grammar.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A triangular system whose bar matrix violates the involution
    /// condition or the unitriangularity required by the solver.
    #[error("malformed triangular system: {0}")]
    MalformedSystem(String),

    /// A structure constant escaped the positive cone N[q,q^-1,p].
    #[error("positivity violation: structure constant {scalar} at index ({a},{b},{k}) is not in N[q,q^-1,p]")]
    PositivityViolation { a: i64, b: i64, k: i64, scalar: String },

    /// An element expected to lie in the integral form had a true
    /// denominator after reduction.
    #[error("non-integral coefficient: {0}")]
    NonIntegral(String),

    /// A verification suite found a counterexample.
    #[error("verification failed in `{suite}`: {detail}")]
    SuiteFailure { suite: String, detail: String },
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
