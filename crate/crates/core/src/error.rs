use crate::weight::Weight;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a root of {1}")]
    NotARoot(Weight, &'static str),
    #[error("weight {weight} is outside {set}")]
    NotRestricted { weight: Weight, set: String },
    #[error("expected a weight of rank {expected}, got rank {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("the two weights must differ")]
    EqualWeights,
    #[error("cannot untwist by {by} half-steps: summand carries only {has}")]
    Untwist { by: u32, has: u32 },
    #[error("unknown root system {0:?}")]
    UnknownSystem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
