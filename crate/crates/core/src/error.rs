use thiserror::Error;

/// Errors surfaced by the toric computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToricError {
    #[error("configuration is not pointed: no functional is positive on every column")]
    NotPointed,

    #[error("configuration has no grading: the ideal is not homogeneous")]
    NotHomogeneous,

    #[error("lattice is not contained in the ambient lattice")]
    NotASublattice,

    #[error("binomial is not a circuit of the configuration")]
    NotACircuit,

    #[error("{what} exceeds the cap of {limit}")]
    CapExceeded { what: String, limit: usize },

    #[error("{what} did not stabilize below s = {s_max}")]
    Instability { what: String, s_max: usize },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl ToricError {
    /// Short machine-readable tag used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            ToricError::NotPointed => "not-pointed",
            ToricError::NotHomogeneous => "not-homogeneous",
            ToricError::NotASublattice => "not-a-sublattice",
            ToricError::NotACircuit => "not-a-circuit",
            ToricError::CapExceeded { .. } => "cap-exceeded",
            ToricError::Instability { .. } => "instability",
            ToricError::Degenerate(_) => "degenerate",
            ToricError::DimensionMismatch { .. } => "dimension-mismatch",
            ToricError::BadParams(_) => "bad-params",
            ToricError::Parse(_) => "parse",
            ToricError::Overflow(_) => "overflow",
            ToricError::Internal(_) => "internal",
        }
    }
}

pub type Result<T, E = ToricError> = std::result::Result<T, E>;
