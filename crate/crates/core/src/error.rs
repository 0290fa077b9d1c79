use thiserror::Error;

use crate::complex::Face;

/// Errors produced by the library. Parsing and invalid-argument failures are
/// input errors; `GuardExceeded` marks instances refused for size.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid face: {0}")]
    InvalidFace(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid quadrillage: {0}")]
    InvalidQuadrillage(String),
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
    #[error("link operations need dimension at least 2, got {0}")]
    DimensionTooLow(usize),
    #[error("complex is not a closed pseudomanifold")]
    NotClosed,
    #[error("face {0} is not an (n-2)-face of the complex")]
    NotRidgeOfRidge(Face),
    #[error("link of face {0} does not decompose into cycles")]
    LinkNotCycles(Face),
    #[error("complex is not of type {{3,4}}: link lengths {0:?}")]
    NotShortLinked(Vec<usize>),
    #[error("corrupt input: {0}")]
    Inconsistent(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("sequence is not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("zone is not simple")]
    ZoneNotSimple,
    #[error("instance too large: {0}")]
    GuardExceeded(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    pub(crate) fn guard(message: impl Into<String>) -> Self {
        Error::GuardExceeded(message.into())
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded(_))
    }
}
