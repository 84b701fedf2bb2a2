use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("input contains no data rows")]
    EmptyFile,
    #[error("line {line}: expected {expected} fields, found {found}")]
    RaggedRow {
        line: u64,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, field {field}: `{value}` is not a number")]
    NonNumeric {
        line: u64,
        field: usize,
        value: String,
    },
    #[error("line {line}: non-finite value")]
    NonFinite { line: u64 },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("tree schema: {0}")]
    TreeSchema(String),
    #[error("graph format: {0}")]
    GraphFormat(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] xclust_core::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status: 1 for I/O failures, 3 when a size guard was hit,
    /// 2 for every other usage or validation error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } => 1,
            Error::Core(e) if e.is_limit() => 3,
            _ => 2,
        }
    }
}
