use thiserror::Error;

/// Errors raised by the algebra engine and the checkers built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("denominator {0} is not invertible in the coefficient field")]
    NonInvertibleDenominator(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("exponent overflow (exponents are 32-bit)")]
    ExponentOverflow,

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("index {index} out of range (valid: {valid})")]
    IndexOutOfRange { index: usize, valid: String },

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("computation cancelled")]
    Cancelled,

    #[error("extension is not finite over its base: no monic power of `{0}` in the Gröbner basis")]
    NotFinite(String),

    #[error("extension is not free over its base")]
    NotFree,

    #[error("trace degenerate: extension degree {0} vanishes in the coefficient field")]
    TraceDegenerate(usize),

    #[error("ambient ring is not certified as a domain")]
    NotDomain,

    #[error("operation requires positive characteristic")]
    CharacteristicZero,

    #[error("element lies in the ideal: {0}")]
    ElementInIdeal(String),

    #[error("separating element insufficient: {0}")]
    SeparatingElementInsufficient(String),

    #[error("stale relation: {0}")]
    StaleRelation(String),

    /// An internal cross-check failed, or a result contradicts a theorem.
    /// Either way this is a bug in the engine, never a property of the input.
    #[error("internal cross-check disagreement: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
