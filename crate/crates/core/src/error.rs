use thiserror::Error;

/// Errors raised by the library.
///
/// Input problems (malformed files, shape mismatches) are separated from
/// mathematical failures so the command-line tool can map them to distinct
/// exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0}")]
    Validation(String),

    #[error("{file}:{line}: {message}")]
    Parse { file: String, line: usize, message: String },

    #[error("cochain is not a cocycle: {0}")]
    NotCocycle(String),

    #[error("bundle invariant violated: {0}")]
    InvariantViolation(String),

    #[error("condition ({index}) fails: {witness}")]
    ConditionFailed { index: u8, witness: String },

    #[error("vertex set is not orbit-closed: {g}·{v} = {image} lies outside")]
    NotOrbitClosed { g: usize, v: usize, image: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("α value {value} on arrow {g} over edge {edge:?} lies outside [-1/2, 1/2)")]
    AlphaOutsideWindow { g: usize, edge: [usize; 2], value: String },

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    /// Short machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Validation(_) => "validation",
            Error::Parse { .. } => "parse",
            Error::NotCocycle(_) => "not-cocycle",
            Error::InvariantViolation(_) => "invariant-violation",
            Error::ConditionFailed { .. } => "condition-failed",
            Error::NotOrbitClosed { .. } => "not-orbit-closed",
            Error::Precondition(_) => "precondition",
            Error::AlphaOutsideWindow { .. } => "alpha-window",
            Error::Numerical(_) => "numerical",
        }
    }

    /// True for malformed input, false for failures of a mathematical property.
    pub fn is_validation(&self) -> bool {
        matches!(self, Error::Validation(_) | Error::Parse { .. } | Error::NotOrbitClosed { .. })
    }
}
