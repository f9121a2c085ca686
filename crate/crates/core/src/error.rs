use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("evaluation point has {got} coordinates, polynomial has {expected} variables")]
    PointArity { expected: usize, got: usize },
    #[error("coordinate {index} of the evaluation point is zero")]
    ZeroCoordinate { index: usize },
    #[error("shape mismatch: {left_rows}x{left_cols} against {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("determinant is not a unit")]
    NotUnit,
    #[error("{what} index {index} out of range (bound {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: i64,
        bound: i64,
    },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("invalid partition {parts:?} of {n}")]
    InvalidPartition { parts: Vec<usize>, n: usize },
    #[error("conjugate is not traceless (trace {trace})")]
    NotTraceless { trace: String },
    #[error("unknown character name {0:?}")]
    UnknownCharacter(String),
    #[error("inner product with {name} is not an integer: {value}")]
    NonIntegerMultiplicity { name: String, value: String },
    #[error("nonzero residual character after decomposition: {0}")]
    NonzeroResidual(String),
    #[error("character differs between two lifts of class {class}: {first} vs {second}")]
    LiftDisagreement {
        class: String,
        first: String,
        second: String,
    },
    #[error("trace {0} is not an integer")]
    NonIntegerTrace(String),
    #[error("unsupported spectrum: characteristic polynomial has a non-rational factor of degree {0}")]
    UnsupportedSpectrum(usize),
    #[error("attracting space of {which} is not a point (dimension {dim})")]
    NotAPoint { which: &'static str, dim: usize },
    #[error("matrix is congruent to I only to level {level}, graded image at level {wanted} requested")]
    LevelTooLow { level: u32, wanted: u32 },
    #[error("entry {0} is not an integer")]
    NotInteger(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
