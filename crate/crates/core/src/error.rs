use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown edge id {0}")]
    UnknownEdge(u32),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge {0} is a loop")]
    LoopEdge(u32),
    #[error("{what} exceeds the supported bound {limit}")]
    TooLarge { what: &'static str, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("digraph is not acyclic")]
    NotAcyclic,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
}

pub type Result<T> = std::result::Result<T, Error>;
