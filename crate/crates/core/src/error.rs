use std::fmt;

use thiserror::Error;

/// A violated distance constraint, reported with 1-based vertex ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub color_u: u32,
    pub color_v: u32,
    pub required: u32,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertices {} and {} have colors {} and {} (difference {}), required distance {}",
            self.u + 1,
            self.v + 1,
            self.color_u,
            self.color_v,
            self.color_u.abs_diff(self.color_v),
            self.required
        )
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge ({u}, {v}) has zero distance")]
    ZeroDistance { u: usize, v: usize },
    #[error("self-loop on vertex {0} is not allowed in a bandwidth coloring graph")]
    SelfLoop(usize),
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("coloring has {got} entries, graph has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("color {color} outside allowed range 1..={max}")]
    ColorOutOfRange { color: u32, max: u32 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("solution format: {0}")]
    Format(String),
    #[error("infeasible coloring: {0}")]
    Infeasible(Violation),
    #[error("invalid solver configuration: {0}")]
    Config(String),
    #[error("instance has {n} vertices, exhaustive search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}
