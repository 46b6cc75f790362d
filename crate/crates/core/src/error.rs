use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments outside the range where a formula or routine is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A request the library has no closed form for.
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("inadmissible word {word}: the leading entry must satisfy (s₁,ε₁)≠(1,1)")]
    Inadmissible { word: String },

    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("non-invertible series: constant term is not the unit polynomial 1")]
    NonInvertible,

    #[error("u-power {requested} exceeds truncation order {order}")]
    TruncationOverflow { requested: usize, order: usize },
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
