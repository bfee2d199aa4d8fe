use thiserror::Error;

/// Unified error type for the crate.
///
/// Internal-invariant violations (a certificate that fails re-validation, a
/// lemma whose guaranteed object cannot be found) are *not* errors: those
/// abort via panic, because returning them would hand the caller an
/// unvalidated result.
#[derive(Debug, Error)]
pub enum Error {
    /// A group/graph/field specification string could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A parameter is outside the supported domain (wrong prime power,
    /// non-simple parameters, overflow range, ...).
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// Enumeration would exceed the configured element cap.
    #[error("group order exceeds cap ({cap}): stopped after {seen} elements")]
    CapExceeded { cap: usize, seen: usize },

    /// A data file (generator data, corpus file) is malformed or inconsistent.
    #[error("data error: {0}")]
    Data(String),

    /// A precondition on a witness or other structured input is violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Wrapped I/O error with context.
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
