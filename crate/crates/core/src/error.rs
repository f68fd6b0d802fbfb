use thiserror::Error;

/// Errors raised by the solvers and the scenario loader.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A floating point quantity became non-finite or a solver failed.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// A scenario or input structure violates one of its invariants.
    #[error("validation error: {0}")]
    Validation(String),

    /// Custom utility table has no entry for the requested pair.
    #[error("utility table has no entry for a = {a}, t = {t}")]
    Lookup { a: f64, t: f64 },

    /// Symmetric-equilibrium routines refuse asymmetric inputs.
    #[error("asymmetric input refused: {0}")]
    Asymmetric(String),

    /// Posterior requested for a signal profile of zero probability.
    #[error("posterior undefined: signal profile ({m}, {n}) has zero probability")]
    UndefinedPosterior { m: usize, n: usize },

    /// A structural assumption audit failed.
    #[error("assumption audit failed: {0}")]
    Assumption(String),

    /// Enumeration would exceed the configured cap.
    #[error("enumeration of {count} assignments exceeds the cap of {cap}")]
    TooLarge { count: u128, cap: u128 },

    /// Scenario file could not be parsed.
    #[error("scenario parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
