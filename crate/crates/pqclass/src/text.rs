//! Text forms for permutations, point sequences and classes.
//!
//! A permutation is written in compact digits (`31524`) when it has at most
//! nine entries, space separated (`3 1 5 2 4`) otherwise, and `()` when empty.
//! A class is a comma-separated list of permutations.

use pqclass_core::{CellKind, InflationSkeleton, PatternClass, Permutation, PointSequence};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TextError {
    #[error("empty input")]
    Empty,
    #[error("malformed token {token:?} in {text:?}")]
    Malformed { token: String, text: String },
    #[error("{text:?}: {source}")]
    Invalid {
        text: String,
        #[source]
        source: pqclass_core::Error,
    },
}

pub fn parse_permutation(text: &str) -> Result<Permutation, TextError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(TextError::Empty);
    }
    trimmed.parse().map_err(|e| match e {
        pqclass_core::Error::Parse(token) => {
            TextError::Malformed { token, text: trimmed.to_string() }
        }
        source => TextError::Invalid { text: trimmed.to_string(), source },
    })
}

/// `3142,4132` or `3142, 4132`; reduced to an antichain.
pub fn parse_class(text: &str) -> Result<PatternClass, TextError> {
    if text.trim().is_empty() {
        return Err(TextError::Empty);
    }
    let basis = text
        .split(',')
        .map(parse_permutation)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PatternClass::new(basis))
}

/// Distinct integers, separated by spaces or commas. A single run of digits
/// with no separators is read one digit per entry.
pub fn parse_point_sequence(text: &str) -> Result<PointSequence, TextError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(TextError::Empty);
    }
    let is_sep = |c: char| c.is_whitespace() || c == ',';
    let entries: Vec<i64> = if !trimmed.contains(is_sep) && trimmed.chars().all(|c| c.is_ascii_digit()) {
        trimmed.chars().map(|c| i64::from(c.to_digit(10).unwrap())).collect()
    } else {
        trimmed
            .split(is_sep)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse().map_err(|_| TextError::Malformed {
                    token: t.to_string(),
                    text: trimmed.to_string(),
                })
            })
            .collect::<Result<_, _>>()?
    };
    PointSequence::new(entries)
        .map_err(|source| TextError::Invalid { text: trimmed.to_string(), source })
}

/// `52413[D,D,1,D,D]`: a skeleton with one cell kind (`I`, `D` or `1`) per entry.
pub fn parse_inflation(text: &str) -> Result<InflationSkeleton, TextError> {
    let trimmed = text.trim();
    let malformed = |token: &str| TextError::Malformed { token: token.to_string(), text: trimmed.to_string() };
    let (skel, rest) = trimmed.split_once('[').ok_or_else(|| malformed(trimmed))?;
    let cells = rest.strip_suffix(']').ok_or_else(|| malformed(rest))?;
    let cells = cells
        .split(',')
        .map(|c| match c.trim() {
            "I" => Ok(CellKind::Increasing),
            "D" => Ok(CellKind::Decreasing),
            "1" => Ok(CellKind::Singleton),
            other => Err(malformed(other)),
        })
        .collect::<Result<Vec<_>, _>>()?;
    InflationSkeleton::new(parse_permutation(skel)?, cells)
        .map_err(|source| TextError::Invalid { text: trimmed.to_string(), source })
}

pub fn format_class(c: &PatternClass) -> String {
    c.basis().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
