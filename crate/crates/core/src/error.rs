use thiserror::Error;

/// Errors produced by the diamond-channel computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A link gain was negative, NaN, or infinite.
    #[error("invalid gain {0}: gains must be finite and nonnegative")]
    InvalidGain(f64),

    /// A GDOF exponent was negative, NaN, or infinite.
    #[error("invalid exponent {0}: exponents must be finite and nonnegative")]
    InvalidExponent(f64),

    /// A linear program's dimensions are inconsistent.
    #[error("malformed linear program: {0}")]
    MalformedProgram(String),

    /// A linear program exceeds the size the solver or enumerator accepts.
    #[error("linear program too large: {vars} variables, {rows} rows (limit {var_limit}x{row_limit})")]
    ProgramTooLarge {
        vars: usize,
        rows: usize,
        var_limit: usize,
        row_limit: usize,
    },

    /// The simplex iteration cap was reached without convergence.
    #[error("simplex did not converge within {0} iterations")]
    SolverStalled(usize),

    /// An operation was called outside the channel region where it is defined.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A gap formula was requested for a region that does not match the channel.
    #[error("region mismatch: {0}")]
    RegionMismatch(String),

    /// A numeric evaluation left the representable range.
    #[error("domain error: {0}")]
    Domain(String),
}
