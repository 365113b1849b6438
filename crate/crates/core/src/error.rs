use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("upper path drops below lower path after step {index}")]
    DominanceViolation { index: usize },
    #[error("path lengths differ: upper has {upper} steps, lower has {lower}")]
    LengthMismatch { upper: usize, lower: usize },
    #[error("paths end at different heights: upper rank {upper}, lower rank {lower}")]
    RankMismatch { upper: usize, lower: usize },
    #[error("ground set must be nonempty")]
    EmptyGroundSet,
    #[error("element {element} is outside 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matroid is not connected")]
    NotConnected,
    #[error("diagram is not a snake")]
    NotASnake,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("enumeration would exceed the size guard of {limit}")]
    SizeGuard { limit: usize },
    #[error("node {0} not found")]
    NodeNotFound(usize),
    #[error("parameters out of range: {0}")]
    Range(String),
    #[error("negative h* entry h*_{index} = {value}")]
    NegativityViolation { index: usize, value: String },
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// True for failures of an internal cross-check rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Consistency(_) | Error::NegativityViolation { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
