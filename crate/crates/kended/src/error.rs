use thiserror::Error;

/// Errors produced by graph construction, I/O, and the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6Parse { offset: usize, reason: String },

    #[error("graph of order {0} does not fit the graph6 short form (max 62)")]
    Graph6TooLarge(usize),

    #[error("graph is not connected")]
    NotConnected,

    #[error("order {n} exceeds the size guard {limit}")]
    SizeGuard { n: usize, limit: usize },

    #[error("rejection sampling gave up after {0} draws; try a larger edge probability")]
    SamplingExhausted(usize),

    #[error("not a valid subtree: {0}")]
    InvalidSubTree(String),

    #[error("tree has fewer than 3 leaves, so it has no branch vertex")]
    NoBranchVertex,

    #[error("invalid exchange: {0}")]
    InvalidExchange(String),

    #[error("invalid theorem instance: {0}")]
    InvalidInstance(String),
}

pub type Result<T> = std::result::Result<T, Error>;
