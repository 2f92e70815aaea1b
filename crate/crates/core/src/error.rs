use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("index {index} out of range for permutation of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("arity mismatch: skeleton of length {expected} given {found} children")]
    ArityMismatch { expected: usize, found: usize },

    #[error("permutation {0} is not Baxter")]
    NotBaxter(String),

    #[error("invalid floorplan: {}", .0.join("; "))]
    InvalidFloorplan(Vec<String>),

    #[error("invalid generating tree: {0}")]
    InvalidTree(String),

    #[error("skeleton {skeleton} of length {len} exceeds order {k}")]
    ExceedsOrder {
        skeleton: String,
        len: usize,
        k: usize,
    },

    #[error("{what} = {value} exceeds the cap of {cap} (pass the override flag to allow it)")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
