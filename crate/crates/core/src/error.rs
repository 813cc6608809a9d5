use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("malformed graph document: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid rational {0:?}")]
    BadRational(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("expected {expected} values, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("operation requires {expected} red edges, graph has {actual}")]
    RedCount { expected: usize, actual: usize },

    #[error("{red} red edges exceeds the limit of {limit}")]
    TooManyRedEdges { red: usize, limit: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),

    /// An internal identity failed. This always indicates a bug, never bad input.
    #[error("internal consistency fault: {0}")]
    ConsistencyFault(String),
}

impl Error {
    /// Process exit code: 2 for internal faults, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ConsistencyFault(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
