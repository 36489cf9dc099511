use thiserror::Error;

/// Errors produced while building or analysing groups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("cycle notation parse error: {0}")]
    CycleParse(String),

    #[error("closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("isomorphism test supports orders up to {max}, got {order}")]
    TooLargeForIso { order: usize, max: usize },

    #[error("unsupported field size q = {0}")]
    UnsupportedField(u32),

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("graph parse error: {0}")]
    GraphParse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
