use thiserror::Error;

/// Crate-wide error type.
///
/// Certified computation distinguishes *domain* failures (the requested value
/// does not exist, e.g. the logarithm of a quantity proven nonpositive) from
/// *precision* failures (the answer could not be pinned down before the
/// working-precision cap was reached). Callers that ladder precision treat the
/// latter as a signal to stop, never as license to guess.
#[derive(Debug, Error)]
pub enum Error {
    /// The expression leaves the domain of a partial operation (log of a
    /// nonpositive quantity, square root of a negative one, division by an
    /// interval still containing zero once precision is exhausted).
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested certification could not be completed within the
    /// precision cap.
    #[error("precision exhausted at {bits} bits: {context}")]
    PrecisionExhausted { bits: u32, context: String },

    /// A stated precondition of a derivation step does not hold for the
    /// supplied parameters.
    #[error("side condition violated: {0}")]
    SideCondition(String),

    /// The height calculus does not cover the supplied element.
    #[error("unsupported element: {0}")]
    UnsupportedElement(String),

    /// The inequality passed to the bound solver admits no finite bound.
    #[error("no finite bound: {0}")]
    NoFiniteBound(String),

    /// A certification step could not be closed.
    #[error("step '{step}' failed: {reason}")]
    StepFailed { step: String, reason: String },

    /// Replay of a certificate disagreed with a recorded claim.
    #[error("mismatch in step '{step}': {detail}")]
    Mismatch { step: String, detail: String },

    /// Malformed input (expression syntax, certificate JSON, CLI values).
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
