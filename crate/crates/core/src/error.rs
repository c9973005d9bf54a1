use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge endpoint `{0}` is not a declared vertex")]
    DanglingEndpoint(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("graph has no edges")]
    NoEdges,
    #[error("unknown vertex index {0}")]
    UnknownVertex(usize),
    #[error("unknown edge index {0}")]
    UnknownEdge(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has {got} vertices; limit is {limit}")]
    TooManyVertices { got: usize, limit: usize },
    #[error("automorphism group has {got} elements; limit is {limit}")]
    GroupTooLarge { got: u128, limit: u128 },
    #[error("edge count {got} exceeds enumeration limit {limit}")]
    EdgeBound { got: usize, limit: usize },
    #[error("graph needs at least three branch points (has {0})")]
    TooFewBranchPoints(usize),
    #[error("placement does not fit graph: {0}")]
    BadPlacement(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bad profile expression `{0}`")]
    Profile(String),
    #[error("checkpoint {path}: {msg}")]
    Checkpoint { path: String, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
