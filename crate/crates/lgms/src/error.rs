//! Crate-wide error type and exit-code mapping.

use thiserror::Error;

/// Errors surfaced by the workbench.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed model file or inline matrix (syntax or shape).
    #[error("parse error: {0}")]
    Parse(String),

    /// Exponent matrix is singular.
    #[error("exponent matrix is singular")]
    Singular,

    /// No positive weight system exists (some charge q_i <= 0 or >= 1).
    #[error("invalid weight system: {0}")]
    InvalidWeights(String),

    /// Monomials do not decompose into Fermat/chain/loop atoms.
    #[error("not an atom decomposition: {0}")]
    NotInvertible(String),

    /// A precondition of the requested operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Group enumeration exceeded the configured cap.
    #[error("group order exceeds configured cap {cap}")]
    CapExceeded { cap: usize },

    /// A restriction with a nonempty fixed set has a degenerate critical locus.
    #[error("degenerate restriction: {0}")]
    Degenerate(String),

    /// Filesystem problem (corpus runner, model files).
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit code for the CLI: 2 = input error, 3 = cap/degenerate abort.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } | Error::Degenerate(_) => 3,
            _ => 2,
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
