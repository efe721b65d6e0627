//! Closed-form large-`RT` expansions.
//!
//! These keep the leading free-space term and the first `1/(RT)^2`
//! correction. They are documented as accurate for `RT >= 5`; below that
//! the value is still returned, with [`Quality::OutsideAsymptoticDomain`]
//! on the report.
//!
//! There is no expansion for the photon number: its first correction
//! involves the divergent `zeta(1)`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::ZETA;
use crate::spectrum::Geometry;
use crate::thermo::{Method, Quality, ThermoReport, ThermoState};

/// Smallest `RT` at which the closed forms are considered reliable.
pub const VALIDITY_MIN_RT: f64 = 5.0;

pub fn validity(state: &ThermoState) -> Quality {
    if state.rt() >= VALIDITY_MIN_RT {
        Quality::Reliable
    } else {
        Quality::OutsideAsymptoticDomain
    }
}

/// `12 zeta(4) R^3 T^4 + zeta(2) R T^2`.
pub fn energy_asym(state: &ThermoState) -> f64 {
    let (r, t) = (state.radius(), state.temperature());
    12.0 * ZETA.zeta4 * r.powi(3) * t.powi(4) + ZETA.zeta2 * r * t * t
}

/// `-(4 zeta(4) R^3 T^4 + zeta(2) R T^2)`.
pub fn free_energy_asym(state: &ThermoState) -> f64 {
    let (r, t) = (state.radius(), state.temperature());
    -(4.0 * ZETA.zeta4 * r.powi(3) * t.powi(4) + ZETA.zeta2 * r * t * t)
}

/// `(4 zeta(4) T^4 + zeta(2) T^2 / R^2) / (2 pi^2)`.
pub fn pressure_asym(state: &ThermoState) -> f64 {
    -free_energy_asym(state) / state.volume()
}

/// `16 zeta(4) R^3 T^3 + 2 zeta(2) R T`.
pub fn entropy_asym(state: &ThermoState) -> f64 {
    let (r, t) = (state.radius(), state.temperature());
    16.0 * ZETA.zeta4 * r.powi(3) * t.powi(3) + 2.0 * ZETA.zeta2 * r * t
}

/// `(12 zeta(4) T^4 + zeta(2) T^2 / R^2) / (2 pi^2)`.
pub fn energy_density_asym(state: &ThermoState) -> f64 {
    energy_asym(state) / state.volume()
}

/// Coefficient of `sqrt(P) / R^2` in the density-pressure relation:
/// `zeta(2) / (pi sqrt(2 zeta(4)))`.
pub fn eos_coefficient() -> f64 {
    ZETA.zeta2 / (PI * (2.0 * ZETA.zeta4).sqrt())
}

/// Energy density implied by pressure: `3P - zeta(2) sqrt(P) / (pi sqrt(2 zeta(4)) R^2)`.
pub fn eos_density_from_pressure(pressure: f64, geom: &Geometry) -> Result<f64> {
    if !(pressure > 0.0 && pressure.is_finite()) {
        return Err(Error::invalid("pressure", format!("must be positive, got {pressure}")));
    }
    Ok(3.0 * pressure - eos_coefficient() * pressure.sqrt() / geom.radius().powi(2))
}

/// All closed forms bundled; `photon_number` is `None`.
pub fn asymptotic_report(state: &ThermoState) -> ThermoReport {
    let volume = state.volume();
    let free_energy = free_energy_asym(state);
    let energy = energy_asym(state);
    ThermoReport {
        method: Method::Asymptotic,
        radius: state.radius(),
        temperature: state.temperature(),
        photon_number: None,
        energy,
        free_energy,
        grand_potential: free_energy,
        pressure: pressure_asym(state),
        entropy: entropy_asym(state),
        energy_density: energy_density_asym(state),
        volume,
        quality: validity(state),
    }
}
