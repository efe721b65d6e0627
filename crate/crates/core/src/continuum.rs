//! Continuum approximation: the spectrum is replaced by the density of
//! states `rho(e) = 2 R^3 sqrt(e^2 + R^-2) e` and every thermodynamic
//! quantity becomes a half-line integral in `x = e / T`.
//!
//! With `a = 1/(RT)` the integrals depend on `a` alone:
//!
//! ```text
//! N = 2 (RT)^3     int sqrt(x^2 + a^2) x   / (e^x - 1) dx
//! U = 2 (RT)^3 T   int sqrt(x^2 + a^2) x^2 / (e^x - 1) dx
//! F = 2 (RT)^3 T   int sqrt(x^2 + a^2) x ln(1 - e^-x) dx
//! ```
//!
//! `S = (U - F) / T`, `P = -F / V` and `rho_E = U / V` follow algebraically.

use crate::error::{Error, Result};
use crate::numerics::{integrate_semi_infinite, QuadratureSettings};
use crate::spectrum::Geometry;
use crate::thermo::{Method, ThermoReport, ThermoState};

/// `2 R^3 sqrt(e^2 + R^-2) e`.
pub fn density_of_states(energy: f64, geom: &Geometry) -> Result<f64> {
    if !(energy >= 0.0) {
        return Err(Error::invalid("energy", format!("must be non-negative, got {energy}")));
    }
    let r = geom.radius();
    Ok(2.0 * r.powi(3) * energy.hypot(1.0 / r) * energy)
}

/// Dimensionless modified Planck density `x^2 sqrt(x^2 + a^2) / (e^x - 1)`.
///
/// Physical spectral energy density per unit volume is `(T^4 / pi^2)` times
/// this with `a = 1/(RT)`; `a = 0` gives the free-space Planck form.
pub fn spectral_density(x: f64, a: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    x * x * x.hypot(a) / x.exp_m1()
}

/// One point of the modified Planck curve.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SpectralSample {
    pub x: f64,
    pub u: f64,
    pub a: f64,
}

impl SpectralSample {
    pub fn new(x: f64, a: f64) -> Self {
        Self {
            x,
            u: spectral_density(x, a),
            a,
        }
    }
}

#[inline]
fn bose(x: f64) -> f64 {
    1.0 / x.exp_m1()
}

#[inline]
fn log_vacancy(x: f64) -> f64 {
    // ln(1 - e^-x)
    (-(-x).exp_m1()).ln()
}

pub(crate) fn number_integral(a: f64, settings: &QuadratureSettings) -> Result<f64> {
    integrate_semi_infinite(|x| x.hypot(a) * x * bose(x), settings)
}

pub(crate) fn energy_integral(a: f64, settings: &QuadratureSettings) -> Result<f64> {
    integrate_semi_infinite(|x| x.hypot(a) * x * x * bose(x), settings)
}

pub(crate) fn free_energy_integral(a: f64, settings: &QuadratureSettings) -> Result<f64> {
    integrate_semi_infinite(|x| x.hypot(a) * x * log_vacancy(x), settings)
}

fn prefactor(state: &ThermoState) -> f64 {
    2.0 * state.rt().powi(3)
}

pub fn photon_number(state: &ThermoState, settings: &QuadratureSettings) -> Result<f64> {
    Ok(prefactor(state) * number_integral(state.inverse_rt(), settings)?)
}

pub fn internal_energy(state: &ThermoState, settings: &QuadratureSettings) -> Result<f64> {
    Ok(prefactor(state) * state.temperature() * energy_integral(state.inverse_rt(), settings)?)
}

/// Always negative.
pub fn free_energy(state: &ThermoState, settings: &QuadratureSettings) -> Result<f64> {
    Ok(prefactor(state) * state.temperature() * free_energy_integral(state.inverse_rt(), settings)?)
}

/// `(U - F) / T`.
pub fn entropy(state: &ThermoState, settings: &QuadratureSettings) -> Result<f64> {
    let u = internal_energy(state, settings)?;
    let f = free_energy(state, settings)?;
    Ok((u - f) / state.temperature())
}

/// `-F / V`, the definition used throughout; not the volume derivative.
pub fn pressure(state: &ThermoState, settings: &QuadratureSettings) -> Result<f64> {
    Ok(-free_energy(state, settings)? / state.volume())
}

pub fn energy_density(state: &ThermoState, settings: &QuadratureSettings) -> Result<f64> {
    Ok(internal_energy(state, settings)? / state.volume())
}

/// All quantities by quadrature.
pub fn thermo_report(state: &ThermoState, settings: &QuadratureSettings) -> Result<ThermoReport> {
    let a = state.inverse_rt();
    let scale = prefactor(state);
    let n = number_integral(a, settings).map_err(|e| e.in_quantity("N"))?;
    let u = energy_integral(a, settings).map_err(|e| e.in_quantity("U"))?;
    let f = free_energy_integral(a, settings).map_err(|e| e.in_quantity("F"))?;
    let t = state.temperature();
    Ok(ThermoReport::assemble(
        Method::Quadrature,
        state,
        Some(scale * n),
        scale * t * u,
        scale * t * f,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ZETA;
    use std::f64::consts::{E, PI};

    fn state(r: f64, t: f64) -> ThermoState {
        ThermoState::from_radius_temperature(r, t).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    // 40-digit values at R = T = 1 from an offline mpmath quadrature.
    const N_11: f64 = 6.274929077519271516;
    const U_11: f64 = 14.19963008728403739;
    const F_11: f64 = -5.198935177225636334;
    const S_11: f64 = 19.39856526450967372;

    #[test]
    fn density_of_states_values() {
        let g = Geometry::new(1.0).unwrap();
        assert_eq!(density_of_states(0.0, &g).unwrap(), 0.0);
        assert!(rel(density_of_states(3f64.sqrt(), &g).unwrap(), 4.0 * 3f64.sqrt()) < 1e-15);
        let big = density_of_states(100.0, &g).unwrap();
        assert!(rel(big, 2.0 * 100.0 * 10001f64.sqrt()) < 1e-15);
        assert!(rel(big, 2.0 * 1e4 * (1.0 + 5e-5)) < 2e-9);
        assert!(density_of_states(-1.0, &g).is_err());
    }

    #[test]
    fn spectral_density_values() {
        assert!(rel(spectral_density(1.0, 1.0), 2f64.sqrt() / (E - 1.0)) < 1e-15);
        assert!(rel(spectral_density(1.0, 0.0), 1.0 / (E - 1.0)) < 1e-15);
        assert_eq!(spectral_density(0.0, 1.0), 0.0);
        assert_eq!(spectral_density(800.0, 1.0), 0.0);
        assert!(spectral_density(1e-8, 1.0) < 1e-7);
    }

    #[test]
    fn unit_state_matches_high_precision_reference() {
        let s = state(1.0, 1.0);
        let q = QuadratureSettings::default();
        let r = thermo_report(&s, &q).unwrap();
        assert!(rel(r.photon_number.unwrap(), N_11) < 1e-10);
        assert!(rel(r.energy, U_11) < 1e-10);
        assert!(rel(r.free_energy, F_11) < 1e-10);
        assert!(rel(r.entropy, S_11) < 1e-10);
        assert!(rel(photon_number(&s, &q).unwrap(), N_11) < 1e-10);
        assert!(rel(entropy(&s, &q).unwrap(), r.entropy) < 1e-14);
        assert!(rel(pressure(&s, &q).unwrap(), -F_11 / (2.0 * PI * PI)) < 1e-10);
        assert!(rel(energy_density(&s, &q).unwrap(), U_11 / (2.0 * PI * PI)) < 1e-10);
        assert_eq!(r.grand_potential, r.free_energy);
    }

    #[test]
    fn large_rt_leading_terms() {
        let q = QuadratureSettings::default();
        let s = state(1.0, 2000.0);
        let rt3 = s.rt().powi(3);
        let n = photon_number(&s, &q).unwrap() / rt3;
        let u = internal_energy(&s, &q).unwrap() / (rt3 * s.temperature());
        let e = entropy(&s, &q).unwrap() / rt3;
        assert!(rel(n, 4.0 * ZETA.zeta3) < 1e-3, "{n}");
        assert!(rel(u, 12.0 * ZETA.zeta4) < 1e-6, "{u}");
        assert!(rel(e, 16.0 * ZETA.zeta4) < 1e-5, "{e}");
    }

    #[test]
    fn photon_number_depends_on_rt_only() {
        let q = QuadratureSettings::default();
        let a = photon_number(&state(1.0, 1.0), &q).unwrap();
        let b = photon_number(&state(2.0, 0.5), &q).unwrap();
        assert!(rel(a, b) < 1e-10);
    }

    #[test]
    fn entropy_depends_on_rt_only() {
        let q = QuadratureSettings::default();
        let a = thermo_report(&state(10.0, 1.0), &q).unwrap();
        let b = thermo_report(&state(1.0, 10.0), &q).unwrap();
        assert!(rel(a.entropy, b.entropy) < 1e-10);
    }
}
