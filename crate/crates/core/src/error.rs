use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} vertices requested; at most 62 are supported")]
    TooManyVertices(usize),

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("unknown catalog key `{0}`")]
    UnknownGraph(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("graph on {n} vertices exceeds the exhaustive search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("operation is undefined on the graph with no vertices")]
    EmptyGraph,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid cutset split: {0}")]
    InvalidSplit(String),

    #[error("not a cutset: {0}")]
    NotACutset(String),

    #[error("cutset is not inclusion-minimal: {0}")]
    CutsetNotMinimal(String),

    /// A constructive guarantee failed to re-validate. Seeing this means
    /// either an input was forged or a proven statement has been falsified.
    #[error("guarantee violated: {0}")]
    GuaranteeViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
