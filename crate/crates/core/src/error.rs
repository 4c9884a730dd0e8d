use thiserror::Error;

/// Errors raised by the library. Every variant is a caller-side domain or
/// precondition violation; internal invariants panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cell ({row}, {col}) lies outside the diagram")]
    CellOutsideDiagram { row: usize, col: usize },

    #[error("hook modulus t must be at least 2, got {0}")]
    InvalidHookModulus(usize),

    #[error("cannot pad {parts} parts down to {requested} beads")]
    PaddingTooSmall { parts: usize, requested: usize },

    #[error("bead position ({row}, {col}) is invalid for an abacus with {runners} runners")]
    InvalidBeadPosition {
        row: usize,
        col: usize,
        runners: usize,
    },

    #[error("duplicate bead at ({row}, {col})")]
    DuplicateBead { row: usize, col: usize },

    #[error("no bead at ({row}, {col})")]
    BeadAbsent { row: usize, col: usize },

    #[error("bead at ({row}, {col}) is already in the top row")]
    BeadInTopRow { row: usize, col: usize },

    #[error("cannot slide ({row}, {col}): position above is occupied")]
    SlideTargetOccupied { row: usize, col: usize },

    #[error("abacus runner {runner} has a gap; not a t-core abacus")]
    GappedAbacus { runner: usize },

    #[error("partition {partition} is not a {t}-core")]
    NotACore { partition: String, t: usize },

    #[error("quotient has {got} components, expected {expected}")]
    QuotientArity { got: usize, expected: usize },

    #[error("{0} is not an odd prime")]
    NotOddPrime(i64),

    #[error("{0} is not a prime")]
    NotPrime(i64),

    #[error("valuation of zero is undefined")]
    ZeroValuation,

    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("residue {residue} is out of range for modulus {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u64 },

    #[error("{what}: n = {n} exceeds guard {guard} (override explicitly to proceed)")]
    GuardExceeded {
        what: &'static str,
        n: usize,
        guard: usize,
    },

    #[error("n = {n} exceeds the precomputed range {limit}")]
    OutOfRange { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
