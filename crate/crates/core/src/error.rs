use std::path::PathBuf;

use thiserror::Error;

use crate::spaces::TriDegree;

#[derive(Debug, Error)]
pub enum Error {
    /// `hint` says how to lift the cap, if it can be lifted.
    #[error("n = {n} exceeds the cap of {cap}{hint}")]
    ResourceRefusal {
        n: usize,
        cap: usize,
        hint: &'static str,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{operator} is not well defined at degree {degree}: {witness}")]
    NotWellDefined {
        operator: String,
        degree: TriDegree,
        witness: String,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
