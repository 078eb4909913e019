use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: loop edge rejected")]
    LoopRejected { line: usize },
    #[error("line {line}: malformed line {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("duplicate id {0:?}")]
    DuplicateId(String),
    #[error("enumeration exceeded the limit of {limit} (count reached {count})")]
    LimitExceeded { count: usize, limit: usize },
    #[error("conjunction endpoints do not meet")]
    EndpointMismatch,
    #[error("conjunction would repeat edge {0:?} consecutively")]
    BacktrackEdge(String),
    #[error("window of length {window} does not fit in an arc of length {len}")]
    WindowTooLong { window: usize, len: usize },
    #[error("window length must be at least {min}, got {got}")]
    WindowTooShort { min: usize, got: usize },
    #[error("links have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("not a link of the graph: {0}")]
    NotALink(String),
    #[error("partition does not cover the graph: {0}")]
    PartitionMismatch(String),
    #[error("oracle input of size {size} exceeds the cap {cap}")]
    OracleTooLarge { size: usize, cap: usize },
    #[error("colouring is not total: vertex {0} has no colour")]
    PartialColoring(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("the far side of the cut contains no cycle")]
    NoCycleInY,
    #[error("branch set {0} contains no link of the required length")]
    BranchSetLacksLink(usize),
    #[error("the link graph has no edge")]
    NoEdge,
    #[error("construction produced an invalid result: {0}")]
    ConstructionFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}
