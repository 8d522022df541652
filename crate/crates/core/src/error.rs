use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("loop edge ({0},{0}) is not allowed in a simple graph")]
    LoopEdge(usize),
    #[error("vertex index {index} out of range for graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("graph with {n} vertices exceeds the size cap of {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("computation budget exceeded: {0}")]
    Budget(String),
    #[error("infeasible degree sequence: d={d}, n={n}")]
    InfeasibleDegrees { d: usize, n: usize },
    #[error("rejection budget exhausted after {0} attempts")]
    RejectionBudget(usize),
    #[error("partition has an edge inside a block")]
    InternalEdge,
    #[error("graph is connected; a disconnected graph is required")]
    NotDisconnected,
    #[error("graph is disconnected; a connected graph is required")]
    NotConnected,
    #[error("evaluation point is singular: {0}")]
    Singular(String),
    #[error("root finder did not converge within {0} sweeps")]
    NonConvergence(usize),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("polynomial is not of chromatic shape: {0}")]
    BadShape(String),
}
