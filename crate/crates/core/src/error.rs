use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter lies outside the range where the quantity is defined.
    #[error("parameter out of range: {0}")]
    Parameter(String),
    /// A named hypothesis of the underlying statement is not satisfied.
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("invalid A-graph: {0}")]
    InvalidGraph(String),
    /// Resource guard on enumeration or search size.
    #[error("guard exceeded: {0}")]
    Guard(String),
    #[error("parse error: {0}")]
    Parse(String),
}
