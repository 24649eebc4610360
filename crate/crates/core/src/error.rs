use std::io;

use thiserror::Error;

/// Errors raised while building, legalizing, reading or checking a triangulation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("at least 3 points are required, got {0}")]
    TooFewPoints(usize),
    #[error("all input points are collinear")]
    AllCollinear,
    #[error("points {first} and {second} have identical coordinates")]
    DuplicatePoints { first: usize, second: usize },
    #[error("point {0} has a non-finite coordinate")]
    NonFinite(usize),
    #[error("the three points are collinear and have no circumcircle")]
    CollinearInput,
    #[error("point {0} sees no edge of the current hull")]
    NoVisibleEdge(usize),
    #[error("triangles {0} and {1} do not share an edge")]
    NotAdjacent(usize, usize),
    #[error("four or more points are cocircular; the Delaunay triangulation is not unique")]
    DegenerateCocircular,
    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid stage {0:?}; expected seed, final or stepN with 1 <= N <= points - 3")]
    InvalidStage(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("write failed: {0}")]
    FileWrite(io::Error),
}

impl Error {
    /// Stable identifier printed by the command line tool, one per variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::TooFewPoints(_) => "TooFewPoints",
            Error::AllCollinear => "AllCollinear",
            Error::DuplicatePoints { .. } => "DuplicatePoints",
            Error::NonFinite(_) => "NonFinite",
            Error::CollinearInput => "CollinearInput",
            Error::NoVisibleEdge(_) => "NoVisibleEdge",
            Error::NotAdjacent(..) => "NotAdjacent",
            Error::DegenerateCocircular => "DegenerateCocircular",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::InvalidStage(_) => "InvalidStage",
            Error::Parse { .. } => "ParseError",
            Error::Io(_) => "FileIo",
            Error::FileWrite(_) => "FileWrite",
        }
    }

    /// Reclassifies an I/O failure as a write failure.
    pub(crate) fn into_write(self) -> Self {
        match self {
            Error::Io(e) => Error::FileWrite(e),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
