use thiserror::Error;

use crate::graph::GraphKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("pair {{{0}, {1}}} already carries a relation")]
    AlreadyRelated(usize, usize),

    #[error("pair {{{u}, {v}}} cannot be identified: {reason}")]
    Ineligible {
        u: usize,
        v: usize,
        reason: &'static str,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{format} parse error: {message}")]
    Parse {
        format: &'static str,
        message: String,
    },

    #[error("expected a {expected} graph, found a {found} graph")]
    KindMismatch {
        expected: GraphKind,
        found: GraphKind,
    },

    #[error("graph has {n} vertices, above the size guard of {limit}")]
    SizeGuard { n: usize, limit: usize },

    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),

    #[error("interpolation produced a non-integral coefficient {0}")]
    NonIntegral(String),

    #[error("partial colouring: {assigned} of {n} vertices coloured")]
    PartialColouring { assigned: usize, n: usize },

    #[error("colour {colour} outside 1..={k}")]
    ColourOutOfRange { colour: usize, k: usize },

    #[error("not a comparability graph: inconsistent forcing cycle {cycle:?}")]
    NotComparability { cycle: Vec<(usize, usize)> },

    #[error("unknown {what}: {name}")]
    Unknown { what: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(format: &'static str, message: impl Into<String>) -> Error {
    Error::Parse {
        format,
        message: message.into(),
    }
}
