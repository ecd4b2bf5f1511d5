use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand mismatch: {0} vs {1}")]
    RadicandMismatch(String, String),
    #[error("radicand {0} must be a positive non-square rational")]
    InvalidRadicand(String),
    #[error("graph has no root")]
    MissingRoot,
    #[error("unknown base graph `{0}`")]
    UnknownBase(String),
    #[error("invalid vertex {vertex} for graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty graph")]
    EmptyGraph,
    #[error("matrix order {order} exceeds limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("zero vector")]
    ZeroVector,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("vanishing denominator at x = {0}")]
    VanishingDenominator(String),
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;
