use thiserror::Error;

use crate::polyhedral::ValidationReport;

/// Errors raised across the library.
///
/// Variants fall into two groups: input problems (bad fans, bad documents,
/// unknown names) and internal invariant violations that indicate a sign or
/// orientation bug (`CompositionNotZero`, `ResolutionFailure`,
/// `NonIntegralInclusion`).
#[derive(Debug, Error)]
pub enum Error {
    #[error("composition of consecutive differentials is not zero ({context})")]
    CompositionNotZero { context: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("cone is not strictly convex: it contains a line")]
    NotStrictlyConvex,

    #[error("zero vector cannot generate a ray")]
    ZeroRay,

    #[error("face is not a facet: codimension {codim} instead of 1")]
    NotFacet { codim: isize },

    #[error("cone is not a member of the fan")]
    ConeNotInFan,

    #[error("fan is not complete; this computation requires a complete fan")]
    NotComplete,

    #[error("invalid fan: {0}")]
    InvalidFan(ValidationReport),

    #[error("Čech complex does not resolve the constant sheaf: {0}")]
    ResolutionFailure(String),

    #[error("inclusion of orthogonal lattices is not integral")]
    NonIntegralInclusion,

    #[error("invalid supporting data: {0}")]
    InvalidChoice(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown builtin fan `{0}`")]
    UnknownBuiltin(String),
}

impl Error {
    /// True for failures caused by user input rather than by a broken
    /// internal invariant.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::CompositionNotZero { .. } | Error::ResolutionFailure(_) | Error::NonIntegralInclusion
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
