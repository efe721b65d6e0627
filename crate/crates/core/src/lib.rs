//! Photon gas on the compact space `R x S^3`.
//!
//! The spatial three-sphere of radius `R` gives photons the discrete
//! spectrum `e_n = sqrt(n^2 - 1) / R` with `2 n^2` states per level. This
//! crate evaluates the equilibrium thermodynamics of that gas three ways:
//!
//! - [`modesum`]: exact Bose-Einstein sums over the discrete levels;
//! - [`continuum`]: quadrature over the continuum density of states;
//! - [`asymptotics`]: closed-form large-`RT` expansions.
//!
//! [`processes`] builds adiabats, the spectral peak and the
//! equation-of-state residual on top of those, and [`cli`] exposes
//! everything as CSV or JSON tables.
//!
//! Natural units throughout (`hbar = c = k_B = 1`).

pub mod asymptotics;
pub mod cli;
pub mod continuum;
pub mod error;
pub mod modesum;
pub mod numerics;
pub mod processes;
pub mod spectrum;
pub mod thermo;

pub use error::{Error, Result};
pub use processes::Evaluator;
pub use spectrum::{Geometry, ModeLevel};
pub use thermo::{Method, Quality, ThermoReport, ThermoState};
