use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: O_{left} vs O_{right}")]
    AmbientMismatch { left: u8, right: u8 },

    #[error("generator count {0} outside supported range 2..=64")]
    InvalidN(usize),

    #[error("letter {letter} outside 1..={n}")]
    InvalidLetter { letter: usize, n: u8 },

    #[error("level error: {0}")]
    Level(String),

    #[error("argument error: {0}")]
    Argument(String),

    #[error("presentation error: {0}")]
    Presentation(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("undefined degree: element is not gauge-homogeneous (support {0:?})")]
    UndefinedDegree(Vec<i64>),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("format error in `{field}`: {message}")]
    Format { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn format(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            field: field.into(),
            message: message.into(),
        }
    }
}
