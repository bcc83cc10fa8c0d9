use thiserror::Error;

/// Errors raised by evaluation and construction routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The argument lies within the pole-exclusion radius of a pole.
    #[error("pole: {0}")]
    Pole(String),
    /// The argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An L-polynomial violates `a_{2g-i} = q^(g-i) a_i` at index `index`.
    #[error("symmetry error: a_{mirror} != {q}^({g}-{index})*a_{index} (index {index})")]
    Symmetry {
        q: u64,
        g: usize,
        index: usize,
        mirror: usize,
    },
    /// A field specification string could not be parsed.
    #[error("cannot parse field spec at `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn pole(msg: impl Into<String>) -> Error {
    Error::Pole(msg.into())
}
