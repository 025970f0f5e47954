//! Error type shared by every module of the crate.

use crate::fracops::Regime;

/// Everything that can go wrong in this crate.
///
/// Numerical "soft failures" (an integral that only reached part of the
/// requested tolerance) are *not* errors; they are reported through result
/// flags so sweep drivers can keep partial data. Errors are reserved for
/// domain violations and genuinely unusable results.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Γ has poles at 0, −1, −2, …; the value there is undefined.
    #[error("gamma pole: x = {x} is a nonpositive integer")]
    GammaPole { x: f64 },

    /// A precondition on an argument was violated.
    #[error("domain error in {context}: {message}")]
    Domain {
        context: &'static str,
        message: String,
    },

    /// Series argument outside the guaranteed-accuracy window.
    #[error("argument magnitude {argument} exceeds the supported maximum {max}")]
    ArgumentTooLarge { argument: f64, max: f64 },

    /// A series term exceeded the overflow guard before decay set in.
    #[error("series overflow: term magnitude ~1e{ln_term_magnitude_log10:.0} at term {terms} exceeds the overflow guard")]
    SeriesOverflow {
        ln_term_magnitude_log10: f64,
        terms: usize,
    },

    /// The series failed to meet its truncation tolerance within the term cap.
    #[error("series did not converge within {terms} terms")]
    SeriesNonConvergence { terms: usize },

    /// Integration interval with b < a (or non-finite endpoints).
    #[error("invalid interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },

    /// The integrand returned NaN or ±∞ at an interior quadrature node.
    #[error("integrand is not finite at s = {at}")]
    NonFiniteIntegrand { at: f64 },

    /// Finite-difference step became unusable (t too close to the interval
    /// start, or below rounding resolution at t).
    #[error("finite-difference step {step} unusable at t = {t}")]
    StepUnderflow { step: f64, t: f64 },

    /// Malformed tabulated-function CSV input.
    #[error("csv error at line {line}: {message}")]
    CsvFormat { line: usize, message: String },

    /// An operation was called with orders from the wrong problem family.
    #[error("order pair belongs to the wrong regime; expected {expected:?}")]
    WrongRegime { expected: Regime },

    /// Bisection could not bracket a sign change where one is guaranteed.
    #[error("bracketing failed: {message}")]
    BracketFailure { message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Shorthand for [`Error::Domain`].
    pub(crate) fn domain(context: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            context,
            message: message.into(),
        }
    }
}
