use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContourError {
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),

    #[error("attempted to invert zero")]
    DivisionByZero,

    #[error("inexact division")]
    InexactDivision,

    #[error("evaluation point has {got} coordinates, expected {expected}")]
    PointDimension { expected: usize, got: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("interface mismatch: {upper} southern nodes above {lower} northern nodes")]
    InterfaceMismatch { upper: usize, lower: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("unknown line {0}")]
    UnknownLine(usize),

    #[error("generator index {index} out of range for n = {n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("decoration on strand {strand} is not depth-legal for n = {n}, d = {depth}")]
    DepthIllegal { strand: usize, n: usize, depth: String },

    #[error("idempotent index {i} out of range for n = {n}")]
    IdempotentOutOfRange { i: usize, n: usize },

    #[error("pivot {pivot} is invalid: {reason}")]
    InvalidPivot { pivot: u32, reason: String },

    #[error("pivot parameter d{0} vanishes at the specialization")]
    PivotVanishes(u32),

    #[error("context mismatch between algebra elements")]
    ContextMismatch,

    #[error("weight {weight} is not in the label set for n = {n}")]
    WeightNotInLattice { weight: String, n: usize },

    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("cache error: {0}")]
    Cache(String),

    #[error("module error: {0}")]
    Module(String),
}

pub type Result<T> = std::result::Result<T, ContourError>;

impl ContourError {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        ContourError::Parse {
            position,
            message: message.into(),
        }
    }
}
