use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{op}: shape mismatch between {lhs:?} and {rhs:?}")]
    ShapeMismatch {
        op: String,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    #[error("non-finite value produced by {0}")]
    NonFinite(String),

    #[error("masked softmax over empty support")]
    EmptySupport,

    #[error("empty sequence")]
    EmptySequence,

    #[error("{0}")]
    InvalidArg(String),

    #[error("{path}:{line}: {msg}")]
    ParseLine {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("{path}: bad file format at byte {offset}: {msg}")]
    FileFormat {
        path: String,
        offset: u64,
        msg: String,
    },

    #[error("{0}")]
    Data(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn shape(op: impl Into<String>, lhs: &[usize], rhs: &[usize]) -> Self {
        Error::ShapeMismatch {
            op: op.into(),
            lhs: lhs.to_vec(),
            rhs: rhs.to_vec(),
        }
    }
}
