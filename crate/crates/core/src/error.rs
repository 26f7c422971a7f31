use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("amplitude must be finite and non-negative, got {0}")]
    InvalidAmplitude(f64),

    #[error("{name} must lie in {range}, got {value}")]
    OutOfRange {
        name: &'static str,
        range: &'static str,
        value: f64,
    },

    #[error("qubit coefficients not normalised: |a|^2 + |b|^2 = {0}")]
    UnnormalisedQubit(f64),

    #[error("degenerate normalisation {value:e} for {what}")]
    DegenerateNormalisation { what: &'static str, value: f64 },

    #[error("repetition count must be odd and in 1..=101, got {0}")]
    InvalidCode(i64),

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not positive semidefinite (eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("density trace is {0}, expected 1")]
    BadTrace(f64),

    #[error("matrix is not X-shaped (off-X entry of magnitude {0:e})")]
    NotXShaped(f64),

    #[error("jacobi did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("coherent basis is numerically degenerate at alpha = {0:e}")]
    DegenerateBasis(f64),

    #[error("fock truncation error {deficit:e} exceeds {limit:e} at cutoff {cutoff}")]
    TruncationExceeded {
        cutoff: usize,
        deficit: f64,
        limit: f64,
    },

    #[error("refusing to enumerate 2^{0} flip patterns (limit n <= 15)")]
    EnumerationRefused(u32),

    #[error("coherent span state has no non-zero coefficient")]
    ZeroState,
}
