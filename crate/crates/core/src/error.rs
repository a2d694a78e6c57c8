//! Error type shared by all modules.

use thiserror::Error;

/// Failure modes of the numerical routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quantity diverges at the requested point (e.g. K(k) at k = 1).
    #[error("divergence: {0}")]
    Divergence(String),

    /// No periodic extremal path exists for the requested parameter.
    #[error("no periodic solution: {0}")]
    NoPeriodicSolution(String),

    /// Input data contains NaN or infinities.
    #[error("non-finite input: {0}")]
    NonFinite(String),

    /// The grid is too coarse to resolve the requested quantity.
    #[error("insufficient resolution: {0}")]
    Resolution(String),

    /// Adaptive step control underflowed.
    #[error("stiffness: {0}")]
    Stiffness(String),

    /// A linear solve or root bracket is too ill-conditioned to trust.
    #[error("conditioning: {0}")]
    Conditioning(String),

    /// A path whose zero set is needed has no sign change.
    #[error("degenerate path: {0}")]
    DegeneratePath(String),

    /// Spectral quantities violate the ordering the formula assumes.
    #[error("spectral ordering: {0}")]
    SpectralOrdering(String),

    /// Not enough samples/data to produce the requested estimate.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// An iterative routine failed to converge.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// Invalid run configuration.
    #[error("invalid configuration: {0}")]
    Config(String),
}
