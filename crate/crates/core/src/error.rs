use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6: {reason} at byte {offset}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph order {0} is outside 1..=64")]
    Order(usize),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not a tree")]
    NotATree,

    #[error("vertex set is empty")]
    EmptyVertexSet,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("malformed rational `{0}`")]
    Rational(String),

    #[error("{path}:{line}: {message}")]
    Parse { path: String, line: usize, message: String },

    #[error("unknown atlas number {0}")]
    UnknownAtlas(usize),

    #[error("atlas domains differ: {0}")]
    Domain(String),

    #[error("cannot decide minimality without fixture rows for: {0}")]
    FixtureGap(String),

    #[error("cannot read {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(path: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
