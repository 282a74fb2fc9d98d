//! Crate-wide error type.

use std::fmt;

use crate::asymptotic::Method;

pub type Result<T> = std::result::Result<T, Error>;

/// Error conditions surfaced by the numerical routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input lies outside the documented domain of an operation.
    Domain { what: &'static str, value: f64 },
    /// A center-out zero index is invalid for the given degree.
    IndexOutOfRange { n: u32, j: u32 },
    /// A solver configuration violates its invariants.
    InvalidConfig(&'static str),
    /// The segment-equation iteration did not reach the residual tolerance.
    SolverDidNotConverge { m: f64, residual: f64 },
    /// A Hermite zero could not be bracketed or refined to tolerance.
    ZeroRefinementFailed { n: u32, j: u32 },
    /// A zero set with the wrong construction method was supplied.
    MethodMismatch { expected: Method, got: Method },
}

impl Error {
    /// True when the error reflects bad arguments rather than a numerical
    /// failure. The CLI maps usage errors to exit code 2 and the rest to 1.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Domain { .. }
                | Error::IndexOutOfRange { .. }
                | Error::InvalidConfig(_)
                | Error::MethodMismatch { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => {
                write!(f, "domain error: {what} (got {value})")
            }
            Error::IndexOutOfRange { n, j } => {
                write!(f, "zero index j = {j} is out of range for degree n = {n}")
            }
            Error::InvalidConfig(what) => write!(f, "invalid solver config: {what}"),
            Error::SolverDidNotConverge { m, residual } => write!(
                f,
                "segment solver did not converge for M = {m} (last residual {residual})"
            ),
            Error::ZeroRefinementFailed { n, j } => {
                write!(f, "failed to refine zero j = {j} of H_{n}")
            }
            Error::MethodMismatch { expected, got } => {
                write!(
                    f,
                    "expected a zero set with method {expected:?}, got {got:?}"
                )
            }
        }
    }
}

impl std::error::Error for Error {}
