use thiserror::Error;

/// Unified error type for every fallible operation in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// k does not divide r(r-1), so no PENT(k,r) can exist and the block
    /// count r(r(k-1)+k+1)/k is not an integer.
    #[error("inadmissible parameters k={k}, r={r}: r(r-1) is not divisible by k")]
    Admissibility { k: usize, r: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a partition: {0}")]
    Partition(String),

    /// A point fell outside every segment of a piecewise modular map.
    #[error("point {0} lies outside every segment of the automorphism")]
    Spec(usize),

    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("out of range: {0}")]
    Range(String),

    /// A construction needs a design that is neither supplied nor buildable.
    #[error("missing ingredient: {0}")]
    Ingredient(String),

    #[error("not resolvable: {0}")]
    Resolution(String),

    #[error("difference census mismatch: {0}")]
    Census(String),

    #[error("degenerate pair: {0}")]
    Degenerate(String),

    #[error("unknown catalog id: {0}")]
    NotFound(String),

    /// Embedded catalog data failed to parse or to reproduce its claims.
    #[error("catalog data corrupt for {id}: {detail}")]
    DataCorruption { id: String, detail: String },

    #[error("recipe arithmetic mismatch: {0}")]
    Recipe(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
