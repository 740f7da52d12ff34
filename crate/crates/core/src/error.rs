use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what} refused: {actual} exceeds the limit of {limit}")]
    Guard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("vertex {vertex} has degree {degree}, below the required minimum {min}")]
    DegreeBelow {
        vertex: usize,
        degree: usize,
        min: usize,
    },

    #[error("minimum degree is {found}, expected exactly {expected}")]
    MinDegree { expected: usize, found: usize },

    #[error("k = {k} is not supported here (need k >= {min})")]
    KTooSmall { k: usize, min: usize },

    #[error("maximum degree {found} exceeds k - 1 = {allowed}")]
    DegreeAbove { found: usize, allowed: usize },

    #[error("{name} = {value} is outside the admissible range {range}")]
    OutOfRange {
        name: &'static str,
        value: String,
        range: String,
    },

    #[error("sign condition {condition} fails: value {value} is positive")]
    SignCondition { condition: &'static str, value: String },

    #[error("complete graphs are excluded")]
    CompleteGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}
