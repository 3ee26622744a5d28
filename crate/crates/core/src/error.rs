use thiserror::Error;

/// Errors surfaced by the library.
///
/// `CapExceeded` is special: it marks a computation that was refused because a
/// documented search cap would have been crossed, never a wrong answer.
/// Callers that can degrade gracefully turn it into an `Inconclusive` verdict.
/// `InvariantViolation` on the other hand always signals a bug in this crate
/// (for example a primeness verdict that contradicts the implication lattice).
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("zero polynomial not allowed here: {0}")]
    ZeroInput(&'static str),

    #[error("unit (degree-zero) polynomial not allowed here: {0}")]
    UnitInput(&'static str),

    #[error("the ideal is not proper: {0}")]
    ImproperIdeal(String),

    #[error("invalid argument to {op}: {msg}")]
    InvalidArgument { op: &'static str, msg: String },

    #[error("operation {op} is not supported over {ring}")]
    Unsupported { op: &'static str, ring: String },

    #[error("input is not invariant: {0}")]
    NotInvariant(String),

    #[error("elements are not similar (or similarity is undecided): {0}")]
    NotSimilar(String),

    #[error("search cap exceeded in {what} (cap {cap})")]
    CapExceeded { what: String, cap: u64 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
