use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A caller handed in data that breaks an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An internal invariant failed. Always a bug.
    #[error("internal invariant failed: {0}")]
    Internal(String),

    #[error("graph has {n} vertices, oracle cap is {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("trace was built with strategy `{strategy}`, cannot lift a {kind}")]
    StrategyMismatch { strategy: String, kind: String },

    #[error("invalid solution: {0}")]
    InvalidSolution(String),

    #[error("invalid trace: {0}")]
    Trace(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
