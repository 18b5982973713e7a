use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A factor window longer than the word it is taken from.
    #[error("window length {n} exceeds word length {len}")]
    WindowTooLong { n: usize, len: usize },

    /// The scanned prefix does not certify all factors up to the requested
    /// length (factor count fell short of n+1 for some n).
    #[error("prefix of length {prefix_len} is insufficient: {found} distinct factors of length {n}, expected {expected}")]
    InsufficientPrefix {
        prefix_len: usize,
        n: usize,
        found: usize,
        expected: usize,
    },

    /// An empty pattern was handed to the automaton builder.
    #[error("empty pattern in pattern set")]
    EmptyPattern,

    /// A configuration/word length does not match the system size.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// Exhaustive enumeration was requested above the size cap.
    #[error("system size {n} exceeds enumeration cap {cap}; use count_words for counting at larger sizes")]
    SizeOverCap { n: usize, cap: usize },

    /// A numeric or structural parameter is out of range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Requested precision is too low for the computation to be certified.
    #[error("insufficient precision: need at least {needed} digits, got {got}")]
    InsufficientPrecision { needed: u32, got: u32 },

    /// Malformed input while importing a serialized model.
    #[error("parse error: {0}")]
    Parse(String),
}
