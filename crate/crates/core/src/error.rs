use thiserror::Error;

/// Errors raised by the sequence, map and series operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid pivot {pivot} for a word of length {len}")]
    InvalidPivot { pivot: usize, len: usize },

    #[error("{word} is not a {d}-ascent sequence")]
    NotDAscentSequence { word: String, d: u64 },

    #[error("{word} is not a modified {d}-ascent sequence")]
    NotModified { word: String, d: u64 },

    #[error("{0} is not an inversion sequence")]
    NotInversionSequence(String),

    #[error("{0} is not a restricted growth function")]
    NotRgf(String),

    #[error("{0} is not a Cayley permutation")]
    NotCayley(String),

    #[error("{0} is not a permutation")]
    NotPermutation(String),

    #[error("not a Burge word: {0}")]
    NotBurgeWord(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("d = 0 series require an explicit truncation order")]
    TruncationRequired,

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("division by (qx)^{d} is not exact at x^{n}, q^{k}")]
    InexactDivision { d: u64, n: usize, k: usize },

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
