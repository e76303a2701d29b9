use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("rank {rank} is out of range for permutations of size {n}")]
    RankOutOfRange { n: usize, rank: u64 },

    #[error("n = {n} exceeds the cap of {cap} for {what}")]
    AboveCap {
        n: usize,
        cap: usize,
        what: &'static str,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("inconsistent tables: {0}")]
    Inconsistent(String),

    #[error("period iteration exceeded its bound of {bound} steps")]
    PeriodBound { bound: u64 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
