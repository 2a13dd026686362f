use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("invalid topology: {0}")]
    InvalidTopology(String),
    #[error("map is not continuous: preimage of {0} is not open")]
    Discontinuous(String),
    #[error("map is not total: no image for `{0}`")]
    PartialMap(String),
    #[error("size limit exceeded: {what} would need {needed}, limit is {limit}")]
    TooLarge {
        what: &'static str,
        needed: usize,
        limit: usize,
    },
    #[error("path limit of {0} exceeded")]
    LimitExceeded(usize),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("not pre-dihomotopic: no chain of raise flips from {from} to {to}")]
    NotPreDihomotopic { from: String, to: String },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("leg does not preserve relation {0}")]
    RelationViolated(String),
    #[error("base point `{0}` is not in both cover pieces")]
    BaseOutsideOverlap(String),
    #[error("maps disagree on the overlap at `{0}`")]
    OverlapDisagreement(String),
    #[error("malformed program: {0}")]
    MalformedProgram(String),
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
    #[error("document error: {0}")]
    Document(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        // serde_json already reports line and column
        Error::Document(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
