use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive integers, got {0}")]
    NonPositivePart(i64),

    #[error("gap parameter k must be at least 1")]
    ZeroGap,

    #[error("part index {index} out of range for a partition with {len} parts")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("part indices must be strictly increasing")]
    IndicesNotIncreasing,

    #[error("expected {expected} replacement values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("partition is not in C_{{{k},{m}}}: its {k}-measure is {measure} < {m}")]
    NotInC { k: u64, m: usize, measure: usize },

    #[error("partition is not in D_{{{k},{m}}}: {detail}")]
    NotInD { k: u64, m: usize, detail: String },

    #[error("unknown selection strategy {0:?}")]
    UnknownStrategy(String),

    #[error("count overflowed 128 bits")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
