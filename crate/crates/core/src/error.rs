use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("operation is undefined on the empty graph K0")]
    EmptyGraph,

    #[error("{what}: size {size} exceeds the limit {limit}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph6 parse error: {0}")]
    Graph6(String),

    #[error("edge-list parse error: {0}")]
    EdgeList(String),

    #[error("not a permutation of the vertex set: {0}")]
    NotAPermutation(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A structural claim that should hold for every input was contradicted.
    /// The message carries the offending graph in graph6.
    #[error("claim violated: {0}")]
    ClaimViolated(String),
}
