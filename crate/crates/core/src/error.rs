use thiserror::Error;

/// Errors raised by the algebraic and numerical layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("invalid preset parameter: {0}")]
    InvalidPreset(String),
    #[error("preset mismatch: `{left}` vs `{right}`")]
    PresetMismatch { left: String, right: String },
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("phase unit u{0} is not bound to an angle")]
    UnboundPhase(u8),
    #[error("invalid q = {0}; expected 0 < q < 1")]
    InvalidQ(f64),
    #[error("invalid truncation dimension {0}; expected N >= 2")]
    InvalidDimension(usize),
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("unknown representation family `{0}`")]
    UnknownFamily(String),
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("unknown homomorphism `{0}`")]
    UnknownHom(String),
    #[error("representation does not match target factor {index}: {reason}")]
    FactorMismatch { index: usize, reason: String },
    #[error("truncation N = {n} too small for pad = {pad}")]
    PadTooLarge { n: usize, pad: usize },
    #[error("operator norm {0} exceeds 1; not a contraction")]
    NotContraction(f64),
    #[error("word degree {deg} exceeds dilation order {m}")]
    DegreeExceedsOrder { deg: usize, m: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("serialization: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
