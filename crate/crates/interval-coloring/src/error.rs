use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("edge ({v}, {v}) is a loop")]
    SelfLoop { v: usize },

    #[error("invalid parameter {name}: {message}")]
    InvalidParameter { name: &'static str, message: String },

    #[error("graph is disconnected: no finite distance between {u} and {v}")]
    UnreachablePair { u: usize, v: usize },

    #[error("graph is disconnected: diameter is infinite")]
    InfiniteDiameter,

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("coloring covers {got} edges but the graph has {expected}")]
    ColoringSizeMismatch { expected: usize, got: usize },

    #[error("edge {edge} has color {color}; colors must be >= 1")]
    ColorBelowOne { edge: usize, color: u32 },

    #[error("interval condition violated at vertex {vertex}: {message}")]
    IntervalViolation { vertex: usize, message: String },

    #[error("expected {expected}, got a different graph")]
    WrongFamily { expected: String },

    #[error("graph is not {r}-regular (vertex {vertex} has degree {degree})")]
    NotRegular {
        r: usize,
        vertex: usize,
        degree: usize,
    },

    #[error("input coloring is not a valid interval coloring: {message}")]
    InvalidInputColoring { message: String },

    #[error("no edge ({u}, {v}) in the graph (clause addressed a non-edge)")]
    MissingEdge { u: usize, v: usize },

    #[error("edge ({u}, {v}) assigned color {new} but already has {existing}")]
    ConflictingAssignment {
        u: usize,
        v: usize,
        existing: u32,
        new: u32,
    },

    #[error("edge ({u}, {v}) left uncolored by the clause list")]
    UnassignedEdge { u: usize, v: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid_parameter(name: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            message: message.into(),
        }
    }
}
