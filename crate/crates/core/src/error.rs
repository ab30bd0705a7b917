use thiserror::Error;

/// Which side of a joint distribution an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Col,
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axis::Row => f.write_str("row"),
            Axis::Col => f.write_str("column"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("{axis} symbol {symbol:?} has zero probability mass")]
    ZeroMassSymbol { axis: Axis, symbol: String },

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("matrix of {rows}x{cols} exceeds the size cap of {cap} symbols per axis")]
    SizeCapExceeded { rows: usize, cols: usize, cap: usize },

    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },

    #[error("degenerate split: target subset mass {mass} leaves no valid decomposition")]
    DegenerateSplit { mass: f64 },

    #[error("feasible set is empty")]
    InfeasibleConstraint,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
