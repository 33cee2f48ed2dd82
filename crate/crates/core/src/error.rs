use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Variable count outside what an operation supports.
    #[error("n = {n} outside supported range {min}..={max} for {what}")]
    Range {
        what: &'static str,
        n: u32,
        min: u32,
        max: u32,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("bent functions exist only for even n (got n = {0})")]
    OddVariableCount(u32),

    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(u32, u32),

    #[error("not a permutation: {0}")]
    NotPermutation(String),

    #[error("malformed truth table: {0}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
