//! Error type shared across the crate.
//!
//! Every fallible operation reports a structured error instead of
//! panicking, so callers (and the CLI) can turn precondition
//! violations into diagnostics.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Division by zero in a field, or inversion of the zero element.
    #[error("division by zero")]
    DivisionByZero,

    /// A string failed to parse as a rational number.
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    /// Cyclotomic field order must be at least 1.
    #[error("cyclotomic order must be >= 1, got {0}")]
    InvalidOrder(u64),

    /// Two elements or forms belong to different fields.
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    /// Embedding Q(zeta_n) into Q(zeta_m) requires n | m.
    #[error("cannot embed cyclotomic order {src} into order {dst}")]
    BadEmbedding { src: u64, dst: u64 },

    /// Coefficient vector length does not match the declared degree.
    #[error("degree {degree} form needs {expected} coefficients, got {got}")]
    CoefficientCount {
        degree: usize,
        expected: usize,
        got: usize,
    },

    /// An operation received the zero form where a nonzero one is required.
    #[error("the zero form is not allowed here")]
    ZeroForm,

    /// Degree constraint violated (e.g. apolar degree must not exceed
    /// the form's degree, rank queries need degree >= 1).
    #[error("degree constraint violated: {0}")]
    DegreeConstraint(String),

    /// A matrix that must be invertible is singular.
    #[error("singular matrix")]
    SingularMatrix,

    /// A root-of-unity triple is malformed (indices out of range or equal).
    #[error("invalid root triple: {0}")]
    InvalidTriple(String),

    /// Three source or target points of a Moebius map must be pairwise
    /// distinct in the projective line.
    #[error("points must be pairwise distinct: {0}")]
    CollapsedPoints(String),

    /// Partition operations need identical ground sets.
    #[error("partitions have different ground sets")]
    GroundSetMismatch,

    /// JSON input did not match the expected schema.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency check failed; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    /// A verification pass found a genuine mismatch.
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
