//! Linearly implicit Euler time stepping for semilinear stochastic evolution
//! equations
//!
//! ```text
//! du(t) = (A u(t) + f(u(t))) dt + B(u(t)) dW(t),   u(0) = u0,
//! ```
//!
//! on a finite-mode spectral model of the operator `A`. Each time step solves
//! the elliptic problem `(I - tau A) u_{k+1} = u_k + tau f(u_k) + sqrt(tau) B(u_k) chi_k`,
//! either exactly (diagonal in the eigenbasis) or through a tolerance-controlled
//! inexact solver that certifies `||u_exact - u_approx|| <= eps_k` per step.
//!
//! The crate is organized around the pipeline:
//!
//! - [`spectral`]: the operator `A`, fractional-power spaces `D((-A)^s)`,
//!   resolvents and the semigroup, plus configuration validation.
//! - [`fields`]: sine-basis collocation on `(0,1)` and Nemytskii
//!   (composition-type) nonlinearities for the Dirichlet preset.
//! - [`stochastics`]: cylindrical Wiener increments, additive and
//!   multiplicative noise operators, and path coupling across step sizes.
//! - [`scheme`]: the exact scheme, its inexact counterpart with pluggable
//!   sub-solvers, and the tolerance schedule `eps_k = tau^{1+delta}`.
//! - [`analysis`]: Monte Carlo strong-error estimation, rate fitting,
//!   Lipschitz probing of the step-propagation maps, and the exact
//!   Ornstein-Uhlenbeck oracle.

pub mod analysis;
pub mod error;
pub mod fields;
pub mod scheme;
pub mod spectral;
pub mod stochastics;

mod accum;

pub use error::{Error, Result};
pub use fields::{CollocationGrid, ScalarMap, SineBasis};
pub use scheme::{Model, SchemeConfig, SolverChoice, StepRecord, ToleranceRule};
pub use spectral::{SobolevIndex, SpectralOperator, SpectralVector};
pub use stochastics::{NoiseKind, NoiseSpec, WienerPath};
