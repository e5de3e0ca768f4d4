use thiserror::Error;

/// Crate-wide error type; variants map onto the failure modes of the public
/// operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("duplicate points at labels {0} and {1} (duplicates are rejected unless explicitly allowed)")]
    DuplicatePoints(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("label {label} out of range 1..={n}")]
    BadLabel { label: usize, n: usize },

    #[error("index set is not strictly increasing near {0}")]
    UnsortedIndexSet(usize),

    #[error("sets overlap: label {0} lies in both S and T")]
    OverlappingSets(usize),

    #[error("empty set: {0}")]
    EmptySet(&'static str),

    #[error("|T| = {t_len} does not determine a valid lambda in dimension {d}")]
    BadTransversalSize { t_len: usize, d: usize },

    #[error("k = {k} exceeds the point count n = {n}")]
    KTooLarge { k: usize, n: usize },

    #[error("t = {t} outside the valid range {lo}..={hi}")]
    BadT { t: usize, lo: usize, hi: usize },

    #[error("range violation: {0}")]
    RangeViolation(String),

    #[error("no qualifying hyperplane found (preconditions violated)")]
    NotFound,

    #[error("support size {got} invalid: expected exactly {expected} strictly increasing positive indices")]
    BadSupportSize { got: usize, expected: usize },

    #[error("oracle cap exceeded: n = {n} > cap = {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("bound violation: {0} (implementation bug)")]
    BoundViolation(String),

    #[error("backend disagreement: {0} (implementation bug)")]
    OracleDisagreement(String),

    #[error("j = {j} outside {lo}..={hi}")]
    BadJ { j: usize, lo: usize, hi: usize },

    #[error("bad range: {0}")]
    BadRange(String),

    #[error("grid too large: {cells} cells exceeds limit {limit}")]
    GridTooLarge { cells: u64, limit: u64 },

    #[error("curve parameters must be strictly increasing")]
    NonIncreasingParams,

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
