use thiserror::Error;

use crate::graph::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("color count {k} out of range 1..={n}")]
    ColorCountOutOfRange { k: usize, n: usize },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("coloring covers {coloring} vertices but the graph has {graph}")]
    ColoringLengthMismatch { coloring: usize, graph: usize },
    #[error("graph order {order} exceeds the cap of {cap} for {what}")]
    AboveCap {
        what: &'static str,
        order: usize,
        cap: usize,
    },
    #[error("invalid witness input: {0}")]
    InvalidWitnessInput(String),
    #[error("node budget exhausted after {nodes} search nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("invalid graph6 string: {0}")]
    Graph6(String),
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(String),
}

pub type Result<T> = std::result::Result<T, Error>;
