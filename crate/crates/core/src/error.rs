//! Error taxonomy shared by all modules.
//!
//! Two broad classes matter for the CLI exit codes: malformed input
//! (`Input`, `Parse`) and violated mathematical hypotheses (everything
//! else). See [`Error::is_input_error`].

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input data (dimension mismatches,
    /// mixed fields, unknown keys, ...).
    #[error("input error: {0}")]
    Input(String),

    /// Syntax error in a polynomial expression or scenario file,
    /// with a 1-based line/column position.
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// The ideal of a quotient presentation is not zero-dimensional.
    #[error("ideal is not zero-dimensional: {0}")]
    NotZeroDimensional(String),

    /// The algebra is not local or its socle is not one-dimensional.
    #[error("algebra is not Gorenstein local: {0}")]
    NotGorenstein(String),

    /// An element required to be a non-unit is invertible.
    #[error("unit element: {0}")]
    UnitElement(String),

    /// A vector expected to be a cycle of a complex is not.
    #[error("not a cycle: {0}")]
    NotACycle(String),

    /// d∘d ≠ 0 at some position of an assembled complex.
    #[error("complex broken: d∘d ≠ 0 at degree {degree}")]
    ComplexBroken { degree: usize },

    /// A map fails to send cycles to cycles or boundaries to boundaries.
    #[error("not chain compatible: {0}")]
    NotChainCompatible(String),

    /// One of the two rows of the defining matrix identity does not vanish.
    #[error("syzygy violation: {0}")]
    SyzygyViolation(String),

    /// A flag failed to stabilize within the theoretical bound.
    #[error("flag did not stabilize within {0} steps (internal error)")]
    NotStabilized(usize),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// True for errors caused by malformed input (CLI exit code 2),
    /// false for violated mathematical hypotheses (exit code 1).
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Input(_) | Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
