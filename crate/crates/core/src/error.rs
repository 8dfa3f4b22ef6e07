use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge not present: ({0}, {1})")]
    EdgeNotPresent(usize, usize),

    #[error("loop forbidden at vertex {0}")]
    LoopForbidden(usize),

    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("graph not connected")]
    NotConnected,

    #[error("path length must be at least 1")]
    ZeroPathLength,

    #[error("not simple: {0}")]
    NotSimple(String),

    #[error("invalid construction: {0}")]
    InvalidSpec(String),

    #[error("missing subdivision length for edge slot {0}")]
    MissingLength(usize),

    #[error("subdivision length for edge slot {0} must be positive")]
    ZeroLength(usize),

    #[error("n must be at least 3 (got {0})")]
    TooSmall(u64),

    #[error("enumeration ceiling exceeded: {requested} > {ceiling}")]
    CeilingExceeded { requested: usize, ceiling: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("graph6 cannot encode multigraphs (pair ({0}, {1}) has multiplicity {2})")]
    Graph6Multigraph(usize, usize, u32),
}

pub type Result<T> = std::result::Result<T, Error>;
