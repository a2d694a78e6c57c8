//! Numerical machinery for the ground-state eigenvalue density of Hill's
//! operator `Q = -d²/dx² + q(x)` on the unit circle with a white-noise
//! potential.
//!
//! The crate has two halves that cross-validate each other:
//!
//! * deterministic spectral objects built around the extremal path
//!   `p_mu(x) = k √mu sn(√mu x, k)` — Jacobi elliptic functions, the
//!   variational rate functional, the m = 2 Lamé operator and its
//!   five-point simple spectrum, Hill's discriminant (by monodromy
//!   integration and by the finite-gap phase integral), and the
//!   assembled right-tail asymptotics of the density;
//! * stochastic oracles — direct simulation of the ground state of the
//!   discretized white-noise operator, a circular-Brownian-motion path
//!   integral for the density, a conditioned Gaussian mode sampler, and
//!   exact/Monte-Carlo checks of the Rice and Cameron–Martin identities.
//!
//! All path data lives on uniform periodic grids ([`grid::GridPath`]) and
//! all quadrature of smooth periodic integrands uses the trapezoid rule,
//! which is spectrally accurate there.

pub mod asymptotics;
pub mod discriminant;
pub mod elliptic;
pub mod error;
pub mod grid;
pub mod lame;
pub mod linalg;
pub mod ode;
pub mod quad;
pub mod ratefn;
pub mod sampling;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
