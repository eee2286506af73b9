//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not odd")]
    NotOdd(u64),
    #[error("{theta} is not a primitive root modulo {p}")]
    NotPrimitive { theta: u64, p: u64 },
    #[error("alpha = {alpha} is outside 1..={max}")]
    AlphaOutOfRange { alpha: u64, max: u64 },
    #[error("size {requested} exceeds budget {budget}")]
    SizeExceeded { requested: u64, budget: u64 },
    #[error("discrete logarithm of zero is undefined")]
    LogOfZero,
    #[error("construction postcondition failed: {0}")]
    ConstructionFailure(String),
    #[error("operation not defined for provenance {0}")]
    UnsupportedProvenance(String),
    #[error("element {0} lies in the Sidon set")]
    ZInSet(u64),
    #[error("x + y = {got} does not decompose z = {want}")]
    DecompositionMismatch { got: u64, want: u64 },
    #[error("edge {{{0}, {1}}} already present")]
    EdgeExists(u64, u64),
    #[error("the two vertices coincide ({0})")]
    SameVertex(u64),
    #[error("graph contains a 4-cycle; saturation is undefined")]
    NotC4Free,
    #[error("invalid element index {index} for group of order {order}")]
    ElementOutOfRange { index: u64, order: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
