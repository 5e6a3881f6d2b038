use thiserror::Error;

use crate::weylgroup::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid {field}: {message}")]
    Parse { field: String, message: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("sequence is not strictly monotone: {0}")]
    NotMonotone(String),

    #[error("sequence mixes integer and half-integer values")]
    MixedParity,

    #[error("window {window} too small to certify, need at least {needed}")]
    WindowTooSmall { window: i64, needed: i64 },

    #[error("family mismatch: expected {expected}, found {found}")]
    FamilyMismatch { expected: Family, found: Family },

    #[error("not a bijection with finite support: {0}")]
    NotBijection(String),

    #[error("signed permutation violates {0}")]
    SignedSymmetry(String),

    #[error("family d element has an odd number of sign changes")]
    OddSignChanges,

    #[error("element is not a minimal coset representative: {0}")]
    NotMinimalCosetRep(String),

    #[error("(lambda, d) = {0} is not in D(g)")]
    NotInD(String),

    #[error("truncation support violated: {0}")]
    TruncationSupport(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("weight is not dominant: {0}")]
    NotDominant(String),

    #[error("not unitarizable: {0}")]
    NotUnitarizable(String),

    #[error("outside theorem scope: {0}")]
    OutsideScope(String),

    #[error("rank guard exceeded: Weyl group of order {order} exceeds {limit}")]
    RankGuard { order: u64, limit: u64 },

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
