use thiserror::Error;

/// Errors produced by the algebra, simulation and parsing layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid group table: {axiom} fails at cell ({row}, {col})")]
    InvalidTable {
        axiom: &'static str,
        row: usize,
        col: usize,
    },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("not a permutation matrix: row {row}")]
    NotPermutationMatrix { row: usize },

    #[error("operands belong to different algebras")]
    AlgebraMismatch,

    #[error("operation requires {expected}")]
    WrongAlgebra { expected: &'static str },

    #[error("{what} = {got} exceeds the supported limit {max}")]
    SizeLimit {
        what: &'static str,
        max: usize,
        got: usize,
    },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("wrong number of Clifford generators: expected {expected}, got {got}")]
    WrongGeneratorCount { expected: usize, got: usize },

    #[error("energy must be non-zero")]
    ZeroEnergy,

    #[error("velocity {0} is not below the speed of light")]
    Superluminal(String),

    #[error("time steps differ: {0} vs {1}")]
    StepMismatch(String, String),

    #[error("sequence window too short: need {need}, got {got}")]
    WindowTooShort { need: usize, got: usize },

    #[error("mode {k} does not fit a lattice of {cells} cells")]
    ModeOutOfRange { k: i64, cells: usize },

    #[error("field shapes differ: {0} vs {1}")]
    ShapeMismatch(usize, usize),

    #[error("unbalanced delimiter at position {pos}")]
    Unbalanced { pos: usize },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("relation fails: {0}")]
    RelationFailed(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
