use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `Δ = 16b(a^2 - 4b)` vanishes, the plane model is singular.
    #[error("degenerate: Delta=0")]
    DegenerateCurve,

    #[error("bad reduction at p={0}")]
    BadReduction(u64),

    #[error("L_E does not divide L_C at p={0}")]
    FactorizationFailure(u64),

    #[error("no certificate found with primes up to {0}")]
    NoCertificateFound(u64),

    #[error("invalid hint: {0}")]
    InvalidHint(String),

    /// A certificate failed re-validation; the message names the first failing check.
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An internal cross-check failed. Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
