use thiserror::Error;

use crate::hvector::{BiliaisonType, HVector};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("h-vector {0} is not C2-admissible")]
    NotAdmissible(HVector),

    #[error("biliaison type {0} is not strictly increasing")]
    NotStrictlyIncreasing(BiliaisonType),

    #[error("invalid biliaison type: {0}")]
    InvalidBiliaison(String),

    #[error("index {index} is not a gap of {lam}")]
    NotGapIndex { index: usize, lam: BiliaisonType },

    #[error("surface degree must be at least 1, got {0}")]
    InvalidSurfaceDegree(u32),

    #[error("cannot {op} a hyperplane of degree {k} on {h}: {reason}")]
    Hyperplane {
        op: &'static str,
        h: HVector,
        k: u32,
        reason: String,
    },

    #[error("linkage of {h} by {m}x{n} is impossible: {reason}")]
    Linkage {
        h: HVector,
        m: u32,
        n: u32,
        reason: String,
    },

    #[error("invalid complete intersection degrees {m}x{n}")]
    InvalidDegrees { m: u32, n: u32 },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("{0}")]
    OutOfRange(String),

    #[error("{0} is not an ordinary h-vector")]
    NotOrdinary(HVector),

    #[error("reduction failed: {0}")]
    Reduction(String),

    #[error("parse error: {0}")]
    Parse(String),
}
