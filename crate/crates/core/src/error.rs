use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u8, u8),
    #[error("braid group mismatch: {0} vs {1}")]
    GroupMismatch(crate::braids::BraidGroup, crate::braids::BraidGroup),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("({0}, {1}) is not a pair of coprime integers")]
    NotCoprime(i64, i64),
    #[error("determinant {0} is not ±1")]
    NotUnimodular(i64),
    #[error("not a basis of F2")]
    NotBasis,
    #[error("pair is not cyclically reduced")]
    NotCyclicallyReduced,
    #[error("a component has even length, so no palindromic conjugate exists")]
    EvenLength,
    #[error("not a standard pair")]
    NotStandard,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
