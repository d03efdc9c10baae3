use thiserror::Error;

/// Errors raised by constructors and operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("operation requires a symbol with rows of equal length, got defect r = {0}")]
    NonZeroDefect(usize),

    #[error("k = {k}, r = {r} cannot hold a bipartition with {first} and {second} parts")]
    InsufficientK {
        k: usize,
        r: usize,
        first: usize,
        second: usize,
    },

    #[error("support of size {size} cannot carry an involution with {fixed} fixed points")]
    ParityViolation { size: usize, fixed: usize },

    #[error("{0} is not an entry shared by both rows")]
    NotShared(u32),

    #[error("involution does not match the expected support: {0}")]
    SupportMismatch(String),

    #[error("involution is not {0}-admissible")]
    NotAdmissible(usize),

    #[error("block decomposition requires an empty shared part, got {0:?}")]
    NonEmptyShared(Vec<u32>),

    #[error("invalid family key: {0}")]
    InvalidKey(String),

    #[error("graph components disagree with symbol families at n = {n}, r = {r}")]
    FamilyMismatch { n: usize, r: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
