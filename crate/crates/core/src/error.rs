use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("images are not a bijection of 1..={0}")]
    NotBijective(usize),
    #[error("permutation pair does not act transitively")]
    NotTransitive,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("surface is not in the expected stratum (found {found})")]
    WrongStratum { found: String },
    #[error("surface does not have the expected cylinder shape: {0}")]
    WrongShape(String),
    #[error("invalid discriminant {0}")]
    InvalidDiscriminant(i64),
    #[error("invalid prototype {0}")]
    InvalidPrototype(String),
    #[error("q = {0} is not admissible")]
    InadmissibleQ(String),
    #[error("no involution commuting the pair to its inverse")]
    NoInvolution,
    #[error("HLK invariant {0} is outside the classification table")]
    UnknownInvariant(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("invalid vertex id {0}")]
    InvalidVertex(usize),
    #[error("unknown export format {0}")]
    UnknownFormat(String),
    #[error("no integral surface parameters found for {0}")]
    NoIntegralModel(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("bad argument: {0}")]
    BadArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
