use thiserror::Error;

use crate::family::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("message count must be at least 1")]
    EmptyProblem,

    #[error("receiver {receiver}: offset out of range: {offset} (allowed 1..={max})")]
    OffsetOutOfRange {
        receiver: usize,
        offset: usize,
        max: usize,
    },

    #[error("receiver {receiver}: duplicate offset {offset}")]
    DuplicateOffset { receiver: usize, offset: usize },

    #[error("expected {expected} offset sets (one per receiver), got {got}")]
    WrongSetCount { expected: usize, got: usize },

    #[error("receiver index {receiver} out of range 1..={max}")]
    ReceiverOutOfRange { receiver: usize, max: usize },

    #[error("symbol {symbol}: message index {index} out of range 1..={max}")]
    IndexOutOfRange {
        symbol: usize,
        index: usize,
        max: usize,
    },

    #[error("symbol {symbol}: empty support")]
    EmptySupport { symbol: usize },

    #[error("symbol {symbol}: duplicate message index {index}")]
    DuplicateIndex { symbol: usize, index: usize },

    #[error("declared length {declared} does not match {actual} symbols")]
    LengthMismatch { declared: usize, actual: usize },

    #[error("unsupported format version {0} (expected 1)")]
    UnsupportedVersion(u64),

    #[error("malformed JSON: {0}")]
    Json(String),

    #[error("message count mismatch: problem has K={problem}, code has K={code}")]
    KMismatch { problem: usize, code: usize },

    #[error("lift multiplicity must be at least 1")]
    ZeroMultiplicity,

    #[error("{family} (K={k}, D={d}{lambda}): {constraint}", lambda = .lambda.map(|l| format!(", lambda={l}")).unwrap_or_default())]
    Constraint {
        family: Family,
        k: usize,
        d: usize,
        lambda: Option<usize>,
        constraint: String,
    },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("{0}: no printed code; use construct_problem_only")]
    NoPrintedCode(Family),

    #[error("{0}: no closure under lifting")]
    NoClosure(Family),

    #[error("{family}: closure requires m >= 2{extra}", extra = if *.family == Family::Case1 { " (case1 supports m = 2 only)" } else { "" })]
    ClosureMultiplicity { family: Family, m: usize },

    #[error("lifting {input} by m={m} does not give the pattern of {output}")]
    ClosureMismatch {
        input: String,
        output: String,
        m: usize,
    },

    #[error("invalid capacity query: U+D = {sum} exceeds K-1 = {max}")]
    CapacityQuery { sum: usize, max: usize },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Self::Json(e.to_string())
    }
}
