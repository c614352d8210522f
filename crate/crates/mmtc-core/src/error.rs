use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by numerical routines, configuration parsing and the
/// simulation engine.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// A series did not meet its tolerance within the term budget.
    #[error("{op}: series did not converge within {max_terms} terms")]
    NonConvergence { op: &'static str, max_terms: usize },

    /// Adaptive quadrature exhausted its subdivision budget with the
    /// residual error estimate still above tolerance.
    #[error("quadrature failure in {op}: residual {residual:e} above tolerance {tolerance:e}")]
    Quadrature {
        op: &'static str,
        residual: f64,
        tolerance: f64,
    },

    /// Invalid configuration file or parameter set.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// The topology sampler kept producing unusable realizations.
    #[error("degenerate topology: {0}")]
    Degenerate(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain {
            op,
            msg: msg.into(),
        }
    }
}
