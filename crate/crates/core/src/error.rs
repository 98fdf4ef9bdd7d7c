use thiserror::Error;

use crate::grid::{GridSpec, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("grid dimensions must be positive, got n={n}, m={m}")]
    ZeroDimension { n: usize, m: usize },
    #[error("vertex {vertex} lies outside {spec}")]
    OutOfBounds { vertex: Vertex, spec: GridSpec },
    #[error("{0} and {1} are not adjacent")]
    NotAdjacent(Vertex, Vertex),
    #[error("turn line {turn} is outside the span of {from} and {to}")]
    TurnOutsideSpan { turn: usize, from: Vertex, to: Vertex },
    #[error("grid {n}x{m} is outside the supported range: {reason}")]
    Unsupported { n: usize, m: usize, reason: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} given twice")]
    MultiEdge(usize, usize),
    #[error("vertices {0} and {1} are not connected")]
    Unreachable(usize, usize),
    #[error("more than {limit} geodesics between {u} and {v}")]
    TooManyGeodesics { u: usize, v: usize, limit: usize },
    #[error("geodesic endpoints must differ, got {0} twice")]
    SameEndpoints(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path is empty")]
    Empty,
    #[error("path vertex {0} lies outside the graph")]
    OutOfBounds(String),
    #[error("path visits {0} twice")]
    RepeatedVertex(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("argument must be positive")]
    Zero,
    #[error("both grid dimensions must be at least 2, got n={n}, m={m}")]
    DimensionTooSmall { n: u64, m: u64 },
    #[error("infeasible constraints: minima sum to {required} but s = {s}")]
    Infeasible { required: u64, s: u64 },
}

/// Certificate decoding failure. `Syntax` covers malformed JSON and schema violations;
/// the other variants are well-formed documents describing an impossible certificate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("{0}")]
    Syntax(String),
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
}

impl DecodeError {
    pub(crate) fn invalid(field: impl Into<String>, message: impl Into<String>) -> Self {
        DecodeError::Invalid {
            field: field.into(),
            message: message.into(),
        }
    }

    pub fn is_syntax(&self) -> bool {
        matches!(self, DecodeError::Syntax(_))
    }
}

/// Which search limit ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Exhausted {
    #[error("node limit reached")]
    Nodes,
    #[error("time limit reached")]
    Time,
    #[error("too many geodesics for one pair")]
    Geodesics,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph must be connected and have at least one edge")]
    Degenerate,
    #[error("graph has {0} edges; the solver handles at most 128")]
    TooManyEdges(usize),
    #[error("a vertex set needs at least two members, got {0}")]
    SetTooSmall(usize),
    #[error("vertex {0} is not in the graph")]
    NoSuchVertex(usize),
    #[error("no feasible set of size at most {0}")]
    UpperHintTooSmall(usize),
    #[error("budget field {0} must be positive")]
    InvalidBudget(&'static str),
    #[error(transparent)]
    Grid(#[from] GridError),
    /// The search stopped early; sizes up to `proven_infeasible` are ruled out and
    /// `best_found` is the smallest feasible size seen so far.
    #[error("search budget exhausted: {reason}")]
    Inconclusive {
        reason: Exhausted,
        proven_infeasible: Option<usize>,
        best_found: Option<usize>,
    },
}
