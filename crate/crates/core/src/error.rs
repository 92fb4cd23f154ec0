//! Error type shared by all modules.

use thiserror::Error;

/// Errors reported by domain queries, searches and solvers.
#[derive(Debug, Error)]
pub enum Error {
    /// A query left the declared finite window of a domain model or field.
    #[error("window error: {0}")]
    Window(String),

    /// Input too small or trivial for the operation (e.g. < 2 knots).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A stated precondition does not hold for the given arguments.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The query is well-formed but outside the scope of the condition
    /// being tested (e.g. a Harnack pair without enough time separation).
    #[error("rejected query: {0}")]
    Rejected(String),

    /// The model's resolution is too coarse to answer the query.
    #[error("resolution error: {0}")]
    Resolution(String),

    /// A slice or component labeling could not be decided at this resolution.
    #[error("ambiguity at t = {t}: {msg}")]
    Ambiguity { t: f64, msg: String },

    /// Internal solver failure (stability or positivity check tripped).
    #[error("solver error: {0}")]
    Solver(String),

    /// Malformed domain spec or config file.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
