use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("k = {0} is not a Loeschian number (k = a^2 + ab + b^2 for integers a, b >= 0)")]
    NotLoeschian(i64),

    #[error(
        "disks {first} and {second} share colour {colour} but overlap (center distance {distance})"
    )]
    Overlap {
        colour: usize,
        first: usize,
        second: usize,
        distance: f64,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
