use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once in cycle notation")]
    RepeatedPoint(usize),
    #[error("malformed cycle notation: {0:?}")]
    MalformedCycle(String),
    #[error("image list is not a bijection")]
    NotABijection,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("group closure exceeded the order cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("subgroup is not normal: conjugating element {h} by {g} leaves the subgroup (lands on {image})")]
    NotNormal { g: usize, h: usize, image: usize },
    #[error("element index {0} out of range")]
    InvalidElement(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    GroupFile { line: usize, message: String },
    #[error("vertex {0} is not an integer greater than 1")]
    InvalidVertex(u64),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(u64),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("unknown statement {0:?}")]
    UnknownStatement(String),
    #[error("invalid normal-subgroup selector {0:?}")]
    InvalidSelector(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by hitting a configured resource limit.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::OrderCapExceeded { .. })
    }
}
