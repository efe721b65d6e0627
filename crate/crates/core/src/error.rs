use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error(
        "quadrature did not converge after {intervals} intervals \
         (estimate {estimate:e}, error {error:e})"
    )]
    QuadratureNonConvergence {
        intervals: usize,
        estimate: f64,
        error: f64,
    },

    /// The integrand never decayed below the truncation threshold.
    #[error("integrand has not decayed by x = {reached:e}")]
    TruncationNotFound { reached: f64 },

    /// A root search was started on an interval without a sign change.
    #[error("no sign change on [{lo:e}, {hi:e}] (f(lo) = {f_lo:e}, f(hi) = {f_hi:e})")]
    InvalidBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    /// The root finder hit its iteration limit.
    #[error("root search did not converge in {iterations} iterations")]
    RootNonConvergence { iterations: usize },

    /// The discrete mode sum did not meet its tail criterion inside the level budget.
    #[error("mode sum tail criterion not met within {budget} levels")]
    LevelBudgetExhausted { budget: u64 },

    /// A point of a radius sweep failed.
    #[error("at R = {radius}: {source}")]
    AtRadius {
        radius: f64,
        #[source]
        source: Box<Error>,
    },

    /// A named thermodynamic quantity failed to evaluate.
    #[error("failed to evaluate {quantity}: {source}")]
    Quantity {
        quantity: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn in_quantity(self, quantity: &'static str) -> Self {
        Error::Quantity {
            quantity,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
