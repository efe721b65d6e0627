//! Evaluation points and the bundle of thermodynamic quantities shared by
//! every evaluation method.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectrum::Geometry;

/// Radius and temperature at which quantities are evaluated (`mu = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThermoState {
    pub geometry: Geometry,
    temperature: f64,
}

impl ThermoState {
    pub fn new(geometry: Geometry, temperature: f64) -> Result<Self> {
        if !(temperature.is_finite() && temperature > 0.0) {
            return Err(Error::invalid("temperature", format!("must be positive, got {temperature}")));
        }
        Ok(Self {
            geometry,
            temperature,
        })
    }

    pub fn from_radius_temperature(radius: f64, temperature: f64) -> Result<Self> {
        Self::new(Geometry::new(radius)?, temperature)
    }

    pub fn radius(&self) -> f64 {
        self.geometry.radius()
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// The dimensionless product `RT`.
    pub fn rt(&self) -> f64 {
        self.geometry.radius() * self.temperature
    }

    /// `1 / (RT)`, the parameter of the dimensionless spectral density.
    pub fn inverse_rt(&self) -> f64 {
        1.0 / self.rt()
    }

    pub fn volume(&self) -> f64 {
        self.geometry.volume()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactSum,
    Quadrature,
    Asymptotic,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::ExactSum, Method::Quadrature, Method::Asymptotic];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::ExactSum => "exact-sum",
            Method::Quadrature => "quadrature",
            Method::Asymptotic => "asymptotic",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" | "exact-sum" => Ok(Method::ExactSum),
            "quadrature" => Ok(Method::Quadrature),
            "asymptotic" => Ok(Method::Asymptotic),
            other => Err(Error::invalid("method", format!("unknown method `{other}`"))),
        }
    }
}

/// Whether a value is inside its method's accuracy domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quality {
    Reliable,
    /// Closed forms evaluated below `RT = 5`.
    OutsideAsymptoticDomain,
}

/// Every thermodynamic quantity at one state, tagged with how it was computed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThermoReport {
    pub method: Method,
    pub radius: f64,
    pub temperature: f64,
    /// Photon number; `None` for the closed forms, which have no expansion for it.
    pub photon_number: Option<f64>,
    pub energy: f64,
    pub free_energy: f64,
    pub grand_potential: f64,
    pub pressure: f64,
    pub entropy: f64,
    pub energy_density: f64,
    pub volume: f64,
    pub quality: Quality,
}

impl ThermoReport {
    /// Derive `Omega`, `S`, `P` and `rho_E` from `N`, `U`, `F`.
    pub(crate) fn assemble(
        method: Method,
        state: &ThermoState,
        photon_number: Option<f64>,
        energy: f64,
        free_energy: f64,
    ) -> Self {
        let volume = state.volume();
        Self {
            method,
            radius: state.radius(),
            temperature: state.temperature(),
            photon_number,
            energy,
            free_energy,
            grand_potential: free_energy,
            pressure: -free_energy / volume,
            entropy: (energy - free_energy) / state.temperature(),
            energy_density: energy / volume,
            volume,
            quality: Quality::Reliable,
        }
    }

    pub fn rt(&self) -> f64 {
        self.radius * self.temperature
    }

    /// Named scalar fields in a fixed order; `N` is omitted when absent.
    pub fn quantities(&self) -> impl Iterator<Item = (&'static str, f64)> {
        let n = self.photon_number.map(|n| ("N", n));
        n.into_iter().chain([
            ("U", self.energy),
            ("F", self.free_energy),
            ("Omega", self.grand_potential),
            ("P", self.pressure),
            ("S", self.entropy),
            ("energy_density", self.energy_density),
        ])
    }
}

/// `(a - b) / |b|`, with `None` when either side is missing.
pub fn relative_deviation(a: Option<f64>, b: Option<f64>) -> Option<f64> {
    match (a, b) {
        (Some(a), Some(b)) if b != 0.0 => Some((a - b) / b.abs()),
        _ => None,
    }
}
