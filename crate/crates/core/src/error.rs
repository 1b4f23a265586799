use thiserror::Error;

use crate::perm::StatKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {n} exceeds the configured cap {cap}")]
    DegreeTooLarge { n: usize, cap: usize },

    #[error("degree {n} is too small; this operation needs n >= {min}")]
    DegreeTooSmall { n: usize, min: usize },

    #[error("not a permutation of 1..{n}: {images:?}")]
    InvalidPermutation { n: usize, images: Vec<usize> },

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("indices ({i}, {j}) invalid for degree {n}")]
    InvalidPair { i: usize, j: usize, n: usize },

    #[error("statistic `{0}` is not supported here")]
    UnsupportedStat(StatKind),

    #[error("unknown statistic `{0}`")]
    UnknownStat(String),

    #[error("coefficient vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },

    /// The element is not in the requested subspace; carries the nonzero
    /// residual as `(index, value)` pairs in enumeration order.
    #[error("element lies outside {space}: {} nonzero residual coefficient(s)", residual.len())]
    NotInSubspace {
        space: &'static str,
        residual: Vec<(usize, String)>,
    },

    #[error("convention oracle: {0}")]
    Oracle(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
