use core::fmt;

/// Errors raised by the core operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A value occurs twice in a sequence that must have distinct entries.
    DuplicateValue(i64),
    /// The values are not a rearrangement of `1..=n`.
    NotAPermutation,
    /// Permutations are stored with byte-sized values.
    TooLong(usize),
    PositionOutOfRange { position: usize, len: usize },
    ValueOutOfRange { value: i64, len: usize },
    LengthMismatch { left: usize, right: usize },
    InvalidTransition(&'static str),
    /// `family_2431` needs an even `m >= 6`.
    InvalidFamilyParameter(usize),
    /// Operation only supported up to `max` entries.
    OutOfSupportedRange { len: usize, max: usize },
    /// Malformed text; carries the offending token.
    Parse(alloc::string::String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DuplicateValue(v) => write!(f, "duplicate value {v}"),
            Error::NotAPermutation => f.write_str("values are not a permutation of 1..n"),
            Error::TooLong(n) => write!(f, "length {n} exceeds the maximum of 255"),
            Error::PositionOutOfRange { position, len } => {
                write!(f, "position {position} out of range 1..={len}")
            }
            Error::ValueOutOfRange { value, len } => {
                write!(f, "value {value} out of range 1..={len}")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::InvalidTransition(why) => write!(f, "invalid transition: {why}"),
            Error::InvalidFamilyParameter(m) => {
                write!(f, "family parameter m = {m} must be even and at least 6")
            }
            Error::OutOfSupportedRange { len, max } => {
                write!(f, "length {len} is beyond the supported maximum {max}")
            }
            Error::Parse(tok) => write!(f, "cannot parse {tok:?}"),
        }
    }
}

impl core::error::Error for Error {}
