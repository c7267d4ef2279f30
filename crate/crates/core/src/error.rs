use alloc::string::String;
use core::fmt;

use crate::exact::{Field, ParseError};

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the algebra layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two operands (or a container and an element) live over different fields.
    FieldMismatch { expected: Field, found: Field },
    DivisionByZero,
    Parse(ParseError),
    /// Polynomials from rings with different numbers of variables were combined.
    RingMismatch { expected: usize, found: usize },
    /// A coordinate list, row or vector has the wrong length.
    LengthMismatch { expected: usize, found: usize },
    NotHomogeneous,
    InvalidConfig(String),
    InvalidArgument(String),
    /// A closed-form construction was asked for at a parameter where it degenerates.
    DegenerateParameter(String),
    /// An internal postcondition check failed. Indicates a bug.
    SelfCheck(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FieldMismatch { expected, found } => {
                write!(f, "field mismatch: expected {expected}, found {found}")
            }
            Self::DivisionByZero => f.write_str("division by zero"),
            Self::Parse(e) => write!(f, "{e}"),
            Self::RingMismatch { expected, found } => write!(
                f,
                "ring mismatch: expected {expected} variables, found {found}"
            ),
            Self::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Self::NotHomogeneous => f.write_str("polynomial is not homogeneous"),
            Self::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Self::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Self::DegenerateParameter(msg) => write!(f, "degenerate parameter: {msg}"),
            Self::SelfCheck(msg) => write!(f, "self-check failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Self::Parse(e)
    }
}
