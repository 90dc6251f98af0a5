use thiserror::Error;

/// Crate-wide error type for malformed inputs and violated preconditions.
///
/// Search "no result" outcomes are never errors; they are encoded in
/// [`crate::finders::SearchOutcome`]. Errors mean the question itself was
/// ill-posed (out-of-range vertex, bad color id, unparseable file, ...).
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("color {color} out of range: coloring has {n_colors} colors")]
    BadColor { color: usize, n_colors: usize },

    #[error("invalid pattern: {0}")]
    BadPattern(String),

    #[error("witness has {got} vertices but pattern needs {expected}")]
    WitnessArity { expected: usize, got: usize },

    #[error("witness against a coloring host must carry a color")]
    WitnessColorMissing,

    #[error("color given for a plain graph host")]
    UnexpectedColor,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("embedding enumeration exceeded the cap of {cap}")]
    EmbeddingCap { cap: u64 },

    #[error("missing parameter {0}")]
    MissingParameter(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
