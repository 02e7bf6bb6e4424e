use thiserror::Error;

use crate::ordinal::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("exponent nesting depth {depth} exceeds the limit of {limit}")]
    DepthLimit { depth: usize, limit: usize },
    #[error("terms are not in Cantor normal form: {0}")]
    NotCanonical(String),
    #[error("the degree of 0 is undefined")]
    DegreeOfZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("a periodic tail needs a nonempty period")]
    EmptyPeriod,
    #[error("cannot truncate at {eps}: the critical exponent is {xi}")]
    TruncationAboveXi { eps: Ordinal, xi: Ordinal },
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("result would need more than {0} explicit head elements")]
    MaterializationLimit(usize),
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("summand #{index}: blocks have order type {found}, expected {expected}")]
    OrderTypeMismatch {
        index: usize,
        expected: Ordinal,
        found: Ordinal,
    },
    #[error("certificate claims {claimed}, blocks add up to {computed}")]
    ValueMismatch { claimed: Ordinal, computed: Ordinal },
    #[error("block {position} has length 0")]
    ZeroLengthBlock { position: usize },
    #[error("summand index {0} does not exist")]
    UnknownSummandIndex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MixedSumError {
    #[error("{len} summands exceed the enumeration bound of {bound}")]
    BoundExceeded { len: usize, bound: usize },
    #[error("{light} is not below w^({xi})")]
    NotLight { light: Ordinal, xi: Ordinal },
    #[error("the absorbing exponent must be positive")]
    ZeroExponent,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} lies outside the universe")]
    UniverseExhausted(Ordinal),
    #[error("input of size {len} exceeds the brute-force bound of {bound}")]
    BoundExceeded { len: usize, bound: usize },
    #[error("cannot extrapolate a supremum from the samples {0:?}")]
    Extrapolation(Vec<Ordinal>),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Syntax or evaluation error in ordinal, sequence or certificate text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    /// Byte offset into the input line.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}
