use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("labels must be non-empty")]
    EmptyLabel,
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertex {0} is not in the subset")]
    NotInSubset(usize),
    #[error("graph `{0}` is disconnected")]
    Disconnected(String),
    #[error("graph has a single vertex")]
    TrivialGraph,
    #[error("family members do not share one vertex set (member `{0}`)")]
    VertexSetMismatch(String),
    #[error("empty family")]
    EmptyFamily,
    #[error("duplicate member name `{0}`")]
    DuplicateMember(String),
    #[error("instance of size {n} exceeds the exact limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a tree")]
    NotATree,
    #[error("diameter {0} is too small")]
    DiameterTooSmall(u32),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
