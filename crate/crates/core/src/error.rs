use thiserror::Error;

/// Errors raised by constructors and partial operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a Z-partition needs at least one entry")]
    EmptyPartition,
    #[error("entries must be nonincreasing, found {prev} followed by {next}")]
    NotNonincreasing { prev: i64, next: i64 },
    #[error("integer overflow while {0}")]
    Overflow(&'static str),
    #[error("shift class must be nonnegative with last entry 0: {0:?}")]
    NotCanonical(Vec<i64>),
    #[error("Young diagram column lengths must be positive and nonincreasing: {0:?}")]
    InvalidDiagram(Vec<u64>),
    #[error("width {width} is too small for this operation (needs at least {min})")]
    WidthTooSmall { width: usize, min: usize },
    #[error("invalid index pair k={k}, l={l} for width {width}")]
    InvalidIndexPair { k: usize, l: usize, width: usize },
    #[error("criterion needs the larger partition to be at least as wide ({wide} < {narrow})")]
    WidthOrder { wide: usize, narrow: usize },
    #[error("invalid level window: widths {n_min}..{n_max}")]
    InvalidWindow { n_min: usize, n_max: usize },
    #[error("invalid sequence code: {0}")]
    InvalidSequence(String),
    #[error("sequence code tails differ: {p} vs {q}")]
    TailMismatch { p: u64, q: u64 },
    #[error("a union of codes must be nonempty")]
    EmptyUnion,
    #[error("the zero ideal has no sequence code")]
    ZeroIdeal,
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("grid for suite `{suite}` needs {cases} checks, above the ceiling of {ceiling}")]
    GridTooLarge {
        suite: String,
        cases: u64,
        ceiling: u64,
    },
    #[error("invalid grid configuration: {0}")]
    GridConfig(String),
    #[error("family bounds describe no ideals")]
    EmptyFamily,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
