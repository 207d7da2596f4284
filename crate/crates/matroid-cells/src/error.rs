use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground-set sizes differ: {0} vs {1}")]
    DimensionMismatch(u8, u8),

    #[error("element {element} is not valid here (ground set is 1..={n})")]
    InvalidElement { element: u8, n: u8 },

    #[error("ground-set size {0} exceeds the 64-element limit")]
    GroundSetTooLarge(usize),

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("index {index} out of range, expected < {count}")]
    IndexOutOfRange { index: u64, count: u64 },

    #[error("malformed subset: {0}")]
    MalformedSubset(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("non-uniform input not supported (sign '0' at entry {0})")]
    NonUniformInput(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("integer overflow beyond 64 bits")]
    Overflow,

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("checkpoint is not valid JSON: {0}")]
    CheckpointFormat(#[from] serde_json::Error),
}
