use thiserror::Error;

/// Errors raised by the boxkit library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("invalid split partition: {0}")]
    InvalidPartition(String),

    #[error("invalid witness family: {0}")]
    InvalidWitness(String),

    #[error("witness fails verification: {0}")]
    WitnessRejected(String),

    #[error("family member H_{member} is not {property}")]
    MemberNotInterval { member: usize, property: &'static str },

    #[error("edge intersection differs from E(G): pair ({0}, {1}) {2}")]
    IntersectionMismatch(usize, usize, &'static str),

    #[error("chain precondition violated: {0}")]
    ChainViolated(String),

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("realization does not reproduce the graph: {0}")]
    RealizationMismatch(String),

    #[error("no cover with at most {k_max} interval completions")]
    KMaxInsufficient { k_max: usize },

    #[error("unsupported output: {0}")]
    Unsupported(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
