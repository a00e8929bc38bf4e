use thiserror::Error;

use crate::combinat::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },

    #[error("division is not exact")]
    InexactDivision,

    #[error("polynomial is not symmetric in alphabet {0}")]
    NotSymmetric(&'static str),

    #[error("leading exponent {0:?} is not a partition; input is not symmetric")]
    LeadingNotPartition(Vec<u32>),

    #[error("size mismatch: |{lambda}| = {left} but |{rho}| = {right}")]
    SizeMismatch {
        lambda: Partition,
        rho: Partition,
        left: usize,
        right: usize,
    },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("root multiset would have {rank} roots, exceeding the bound {bound}")]
    RankBound { rank: usize, bound: usize },

    #[error("invalid bundle expression: {0}")]
    Bundle(String),

    #[error("parse error at position {pos}: expected {expected}")]
    Parse { pos: usize, expected: String },

    #[error("undefined term j = {j}: parameters (n, k, r) = ({n}, {k}, {r}) lie outside the defined regime")]
    UndefinedTerm { j: usize, n: usize, k: usize, r: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
