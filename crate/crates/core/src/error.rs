use thiserror::Error;

/// Errors produced by the combinatorics engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("letter {letter} out of range 1..={max} for n = {n}", max = n.saturating_sub(1))]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("word {0} is not reduced")]
    NotReduced(String),

    #[error("the family is defined for n >= 4, got n = {0}")]
    FamilyRange(usize),

    #[error("n = {n} exceeds the enumeration bound {max}")]
    FamilyBound { n: usize, max: usize },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("enumeration budget exceeded: {count} words > cap {cap}")]
    BudgetExceeded { count: u64, cap: u64 },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("partition {partition} does not fit the {rows}x2 rectangle")]
    PartitionDoesNotFit { partition: String, rows: usize },

    #[error("bijection failure: {0}")]
    BijectionFailure(String),

    #[error("cover criteria disagree: {0}")]
    CriterionMismatch(String),

    #[error("vertex map is not a bijection: {0}")]
    NonBijectiveMap(String),

    #[error("graph has {vertices} vertices, above the brute-force bound {bound}")]
    IsoBoundExceeded { vertices: usize, bound: usize },

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
