use alloc::string::String;
use core::fmt;

/// Errors raised by construction and verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A denominator vanished where the numerator did not.
    Pole(String),
    /// Division by an exactly zero scalar or polynomial.
    DivisionByZero,
    /// A truncated series was not precise enough to decide a value.
    Precision,
    /// A highest weight violates one of its defining constraints.
    InvalidWeight(String),
    /// A string could not be parsed as an exact number.
    Parse(String),
    /// The bracket closure did not produce every generator.
    Closure(String),
    /// A linear system that must be solvable was not.
    Inconsistent(String),
    /// An operator that should be a multiple of the identity is not.
    NonScalar(String),
    /// A quantity that must be an integer is not.
    NonIntegral(String),
    /// The representation is larger than the configured cap.
    CapExceeded { dim: u64, cap: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole(w) => write!(f, "pole: {w}"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::Precision => f.write_str("series precision exhausted"),
            Error::InvalidWeight(w) => write!(f, "invalid highest weight: {w}"),
            Error::Parse(w) => write!(f, "cannot parse {w:?} as an exact rational"),
            Error::Closure(w) => write!(f, "bracket closure failed: {w}"),
            Error::Inconsistent(w) => write!(f, "inconsistent linear system: {w}"),
            Error::NonScalar(w) => write!(f, "operator is not scalar: {w}"),
            Error::NonIntegral(w) => write!(f, "expected an integer, got {w}"),
            Error::CapExceeded { dim, cap } => {
                write!(f, "dimension {dim} exceeds the cap {cap}")
            }
        }
    }
}
