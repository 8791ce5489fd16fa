use thiserror::Error;

/// Construction and set-algebra errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{n} vertices exceeds the cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} given twice")]
    DuplicateEdge(usize, usize),
    #[error("adjacency rows are not symmetric at {0}-{1}")]
    Asymmetric(usize, usize),
    #[error("vertex sets overlap at {0}")]
    OverlappingSets(usize),
    #[error("blowup needs {expected} parts, got {got}")]
    PartCount { expected: usize, got: usize },
    #[error("part {part} contains an induced P3 {witness:?}")]
    PartNotP3Free { part: usize, witness: [usize; 3] },
    #[error("vertex order is not a permutation")]
    NotAPermutation,
}

/// State captured when an internal consistency check fails.
#[derive(Debug, Clone)]
pub struct BugTrap {
    pub stage: String,
    pub message: String,
    /// Serialized workspace at the time of failure.
    pub workspace: serde_json::Value,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{what} needs exact search on {n} vertices, cap is {cap}")]
    ResourceCap { what: &'static str, n: usize, cap: usize },
    #[error("graph is not (P5, 4-wheel)-free: induced {pattern} on {witness:?}")]
    NotInClass { pattern: String, witness: Vec<usize> },
    #[error("set is not P3-free: induced P3 {witness:?}")]
    NotP3Free { witness: [usize; 3] },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vertex {vertex} fits no bucket of the C5 structure (neighbors in A-sets {mask:05b})")]
    Unclassifiable { vertex: usize, mask: u8 },
    #[error("blowup recognition failed: {0}")]
    Recognition(String),
    #[error("internal check failed in {}: {}", .0.stage, .0.message)]
    BugTrap(Box<BugTrap>),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn bug(stage: impl Into<String>, message: impl Into<String>, workspace: serde_json::Value) -> Error {
        Error::BugTrap(Box::new(BugTrap { stage: stage.into(), message: message.into(), workspace }))
    }

    /// CLI exit code: 2 membership rejection, 3 resource cap, 4 bug trap, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotInClass { .. } => 2,
            Error::ResourceCap { .. } => 3,
            Error::BugTrap(_) => 4,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
