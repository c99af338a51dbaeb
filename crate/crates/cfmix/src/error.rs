//! Crate-wide error type.

/// Errors surfaced by the estimation pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller-supplied argument violates a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Input data is malformed (non-finite samples, ragged rows, ...).
    #[error("invalid data: {0}")]
    InvalidData(String),

    /// Requested dimension is outside the supported set {1, 2, 3}.
    #[error("unsupported dimension {0} (supported: 1, 2, 3)")]
    UnsupportedDimension(usize),

    /// A special-function argument is outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The training loop produced a non-finite loss or gradient.
    #[error("training diverged: {0}")]
    TrainingDiverged(String),

    /// Every EM restart collapsed a component.
    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    /// The requested integration domain misses tail mass; retry with the
    /// suggested half-width.
    #[error("integration domain too narrow: tail contribution {tail:.3e} exceeds {limit:.3e}; widen half-width to at least {suggested:.3e}")]
    WidenDomain {
        tail: f64,
        limit: f64,
        suggested: f64,
    },

    /// Variant/operation mismatch (e.g. density of a CF-only target).
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid_argument(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn invalid_data(msg: impl Into<String>) -> Self {
        Error::InvalidData(msg.into())
    }
}
