use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented domain (bad rank bound, wrong
    /// cardinality for an excluded set, inconsistent sizes, …).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The requested computation is only supported up to a fixed size and the
    /// input exceeds it.
    #[error("{what} supports sizes up to {cap}, got {value}")]
    Capacity {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    /// A construction would produce a base family with no members, which is
    /// not a matroid.
    #[error("construction yields no bases: {0}")]
    EmptyBaseFamily(String),

    /// A matroid file (or payload string) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
