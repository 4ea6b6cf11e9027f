use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },

    #[error("not a latin square: value {value} appears twice in row {row}")]
    DuplicateInRow { row: usize, value: usize },

    #[error("not a latin square: value {value} appears twice in column {col}")]
    DuplicateInCol { col: usize, value: usize },

    #[error("symbol {sym} out of range 1..={n}")]
    SymbolOutOfRange { sym: usize, n: usize },

    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("bad cycle notation: {0}")]
    BadCycles(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a rectangle: {0}")]
    NotARectangle(String),

    #[error("degenerate rectangle: {0}")]
    Degenerate(String),

    #[error("order {n} exceeds search bound {bound}")]
    ExceedsBound { n: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
