//! Error type shared by the whole crate.

use alloc::string::String;
use core::fmt;

/// Errors reported by fallible operations.
///
/// Most of the library is total on its stated domain; these variants cover
/// the documented edge cases (non-invertible series, parameter poles,
/// out-of-range indices, tables that are too short).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Error {
    /// Series inversion requires the constant term to be a unit.
    NonUnitConstantTerm,
    /// A triangle or row was indexed with `k > n`.
    IndexError { n: usize, k: usize },
    /// A number table does not reach the requested index.
    InsufficientTable { needed: usize, max_n: usize },
    /// A parameter sits on a pole of the defining expression.
    DegenerateParameter(&'static str),
    /// A generating-function truncation is too short to pin down every
    /// coefficient of the polynomial being reconstructed.
    TruncationTooShort { order: usize, needed: usize },
    /// Exhaustive enumeration was asked for a size past the guard bound.
    TooLarge { n: usize, max: usize },
    /// A sequence argument has the wrong length.
    BadLength { expected: usize, got: usize },
    /// `verify_misc` was asked for an identity it does not know.
    UnknownIdentity(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonUnitConstantTerm => {
                write!(f, "series has no inverse: constant term is not a unit")
            }
            Error::IndexError { n, k } => write!(f, "index k={k} out of range for n={n}"),
            Error::InsufficientTable { needed, max_n } => {
                write!(f, "table holds indices up to {max_n} but {needed} was requested")
            }
            Error::DegenerateParameter(what) => write!(f, "degenerate parameter: {what}"),
            Error::TruncationTooShort { order, needed } => {
                write!(f, "truncation order {order} too short: need at least {needed}")
            }
            Error::TooLarge { n, max } => write!(f, "n={n} exceeds enumeration bound {max}"),
            Error::BadLength { expected, got } => {
                write!(f, "sequence has length {got}, expected {expected}")
            }
            Error::UnknownIdentity(id) => write!(f, "unknown identity: {id}"),
        }
    }
}

impl core::error::Error for Error {}
