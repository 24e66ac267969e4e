use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Every failure the library reports. All of them describe rejected input or
/// an exhausted resource budget; none are internal errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    ZeroDenominator,
    /// A rational could not be parsed from text.
    Parse(String),
    /// A value was outside its allowed range.
    OutOfRange { what: &'static str, detail: String },
    DimensionMismatch { expected: usize, found: usize },
    NotPrime(u64),
    /// A value was required to lie in `G_F` but does not.
    NotInRing(String),
    /// An exhaustive search would exceed its configured budget.
    BudgetExceeded { needed: u128, budget: u128 },
    /// Anything else that makes the input unusable.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => f.write_str("zero denominator"),
            Error::Parse(s) => write!(f, "cannot parse rational from {s:?}"),
            Error::OutOfRange { what, detail } => write!(f, "{what} out of range: {detail}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::NotInRing(s) => write!(f, "{s} is not in the ring G_F"),
            Error::BudgetExceeded { needed, budget } => write!(
                f,
                "search space of {needed} candidates exceeds budget of {budget}"
            ),
            Error::Invalid(s) => f.write_str(s),
        }
    }
}

impl core::error::Error for Error {}
