use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node index {node} out of range for a graph on {node_count} nodes")]
    InvalidNode { node: usize, node_count: usize },

    #[error("graphs are limited to {max} nodes, got {got}")]
    TooManyNodes { got: usize, max: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("{0:?} is not a tube of the graph")]
    NotATube(Vec<usize>),

    #[error("cannot classify a tube against itself: {0:?}")]
    EqualTubes(Vec<usize>),

    #[error("tubes are not pairwise compatible: {0}")]
    NotATubing(String),

    #[error("graph is disconnected; enable disconnected graphs explicitly to continue")]
    Disconnected,

    #[error("realization failure: {0}")]
    RealizationFailure(String),

    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}
