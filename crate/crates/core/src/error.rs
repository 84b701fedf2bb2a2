use alloc::string::String;

/// Errors raised by the clustering primitives.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("points must have at least one coordinate")]
    ZeroDimension,
    #[error("point {index} has {found} coordinates, expected {expected}")]
    RaggedPoint {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("point {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("feature names: got {found}, expected {expected}")]
    FeatureNames { expected: usize, found: usize },
    #[error("cut on dimension {dim} but the point has {len} coordinates")]
    CutOutOfRange { dim: usize, len: usize },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cluster {0} is empty")]
    EmptyCluster(usize),
    #[error("spacing needs at least two non-empty clusters, found {0}")]
    TooFewGroups(usize),
    #[error("invalid k = {k}: {reason}")]
    InvalidK { k: usize, reason: String },
    #[error("instance exceeds the configured limit: {0}")]
    LimitExceeded(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("not a vertex cover: edge {{{0}, {1}}} is uncovered")]
    NotACover(usize, usize),
    #[error("cover is not minimal: vertex {0} covers no edge of its own")]
    NonMinimalCover(usize),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

impl Error {
    /// True for errors caused by a configured size guard rather than bad input.
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::LimitExceeded(_))
    }
}
