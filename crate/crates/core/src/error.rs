use thiserror::Error;

/// Errors raised by the algebra, representation and linear-algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("specialization point must be nonzero")]
    ZeroSpecializationPoint,

    #[error("pole at q = {point}")]
    Pole { point: String },

    #[error("pole in entry ({row}, {col}) at q = {point}")]
    MatrixPole { row: usize, col: usize, point: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid rank {rank}: {reason}")]
    InvalidRank { rank: usize, reason: &'static str },

    #[error("generator index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    #[error("invalid normal-form word {0:?}")]
    InvalidWord(Vec<u8>),

    #[error("invalid graded space: {0}")]
    InvalidSpace(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("the flip operator needs m = n (got m = {m}, n = {n})")]
    UnequalGrading { m: usize, n: usize },

    #[error("invalid generator label: {0}")]
    InvalidGenerator(String),

    #[error("span closure did not stabilize after {rounds} rounds")]
    ClosureDidNotStabilize { rounds: usize },

    #[error("specialized ranks disagree across points: {0}")]
    RankDisagreement(String),

    #[error("no pole-free specialization point found after {attempts} attempts")]
    NoPoleFreePoint { attempts: usize },

    #[error("self-conjugate partition {partition} has odd degree {degree}")]
    OddSelfConjugateDegree { partition: String, degree: u128 },

    #[error("size bound exceeded: needs {required}, bound is {bound}")]
    SizeBound { required: usize, bound: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
