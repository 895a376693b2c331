use thiserror::Error;

use crate::vset::CAPACITY;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("order {0} exceeds the vertex capacity of {CAPACITY}")]
    CapacityExceeded(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} is not a member of the set")]
    NotAMember(usize),
    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),
    #[error("operation undefined on the graph with no vertices")]
    EmptyGraph,
    #[error("requires a connected graph of order at least 3")]
    NotConnectedOrTooSmall,
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("order {order} exceeds the limit {limit} for {what}")]
    TooLarge {
        what: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
