use thiserror::Error;

/// Errors raised by graph construction, file parsing and the coloring procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} is out of range 1..={n}")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: usize, vertex: usize },

    #[error("edge {edge} joins {u} and {v}, both in part {part}")]
    SamePart {
        edge: usize,
        u: usize,
        v: usize,
        part: u8,
    },

    #[error("{0}")]
    Input(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("t = {t} is outside the realizable range [{lo}, {hi}]")]
    OutOfRange { t: u32, lo: u32, hi: u32 },

    #[error("search capped after {nodes} nodes")]
    Capped { nodes: u64 },

    #[error("internal invariant failure: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
