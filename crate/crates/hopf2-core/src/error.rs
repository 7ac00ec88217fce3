//! Error type shared by every constructor and verifier in the crate.

use alloc::string::String;

/// Failures raised by constructors and by verifiers whose preconditions do
/// not hold. Identity violations found by a checker are *not* errors; they
/// are reported as data in a [`crate::report::Report`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two linear maps or vectors live on incompatible labeled spaces.
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    /// A requested size exceeds the supported desk-scale limits.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    /// An operation was called on data that fails its stated precondition.
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    /// Malformed structural input (ragged tables, unknown labels, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A 2-cochain that is not normalized or does not yield a quasigroup.
    #[error("invalid cochain: {0}")]
    InvalidCochain(String),
    /// A proposed ideal is not closed under multiplication.
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    /// A proposed coideal is not closed under the coproduct.
    #[error("not a coideal: {0}")]
    NotACoideal(String),
    /// A map defined on quotient representatives depends on the representative.
    #[error("ill-defined on the quotient: {0}")]
    IllDefined(String),
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
