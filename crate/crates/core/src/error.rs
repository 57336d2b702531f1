use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set does not induce a connected subgraph")]
    DisconnectedSubset,
    #[error("unsupported size {n}: {reason}")]
    UnsupportedSize { n: usize, reason: &'static str },
    #[error("tree has {tree} vertices but graph has {graph}")]
    VertexSetMismatch { tree: usize, graph: usize },
    #[error("malformed rooted tree: {0}")]
    MalformedTree(String),
    #[error("not a valid search tree on this graph")]
    InvalidSearchTree,
    #[error("not a permutation of the vertex set")]
    NotAPermutation,
    #[error("invalid tubing: {0}")]
    InvalidTubing(String),
    #[error("invalid ranking: {0}")]
    InvalidRanking(String),
    #[error("vertex {child} is not a child of {parent}")]
    NotAChild { parent: Vertex, child: Vertex },
    #[error("rotation {index} ({parent}, {child}) is not applicable")]
    InapplicableStep {
        index: usize,
        parent: Vertex,
        child: Vertex,
    },
    #[error("vertex {0} is not a leaf of the graph")]
    NotALeaf(Vertex),
    #[error("parameter k must be at least 1 (got {0})")]
    BadParameter(usize),
    #[error("search limit exceeded: {what} (explored {explored}, cap {cap})")]
    CapExceeded {
        what: &'static str,
        explored: u128,
        cap: u128,
    },
    #[error("time limit exceeded after exploring {explored} trees")]
    Timeout { explored: u128 },
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
