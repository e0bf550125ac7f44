use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("malformed algebra: {0}")]
    Malformed(String),

    #[error("parse error at {field}: {message}")]
    Parse { field: String, message: String },

    #[error("unknown algebra {name:?}; catalog: {catalog}")]
    UnknownAlgebra { name: String, catalog: String },

    #[error("{what} needs {required} basis elements but the cap is {cap}")]
    CapExceeded {
        what: String,
        required: u128,
        cap: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("Leibniz identity fails on {0} basis triple(s)")]
    NotLeibniz(usize),

    #[error("certification failed: {0}")]
    Certification(String),

    /// A self-check that cannot fail for valid input did fail.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
