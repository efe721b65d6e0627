//! Discrete one-photon spectrum on the three-sphere.
//!
//! Levels are labelled by `n = 2j + 1` with `j` advancing in half-integer
//! steps. Level `n` has energy `sqrt(n^2 - 1) / R` and `2 n^2` states: the
//! `(2j+1)^2` orbital labels `(j3, s3)` times two polarizations.
//!
//! The `n = 1` level is the zero mode; it is never returned by
//! [`enumerate_levels`] and is excluded from every statistical sum.

mod generators;

pub use generators::{build_generators, GeneratorSet, So4Pair};

use serde::Serialize;

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Radius of the spatial three-sphere, in natural units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Geometry {
    radius: f64,
}

impl Geometry {
    pub fn new(radius: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::invalid("radius", format!("must be positive, got {radius}")));
        }
        Ok(Self { radius })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// `2 pi^2 R^3`.
    pub fn volume(&self) -> f64 {
        2.0 * PI * PI * self.radius.powi(3)
    }
}

/// A non-negative half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HalfInteger(u32);

impl HalfInteger {
    pub const fn from_doubled(twice: u32) -> Self {
        Self(twice)
    }

    /// Accepts `j` only if `2j` is a non-negative integer.
    pub fn new(j: f64) -> Result<Self> {
        let twice = 2.0 * j;
        if !(twice.is_finite() && twice >= 0.0 && twice.fract() == 0.0 && twice <= u32::MAX as f64)
        {
            return Err(Error::invalid("j", format!("must be a non-negative half-integer, got {j}")));
        }
        Ok(Self(twice as u32))
    }

    pub fn doubled(self) -> u32 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    /// `2j + 1`.
    pub fn multiplicity(self) -> usize {
        self.0 as usize + 1
    }
}

/// One discrete energy level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeLevel {
    pub n: u64,
    pub j: f64,
    pub energy: f64,
    pub degeneracy: u64,
}

impl ModeLevel {
    fn at(n: u64, geom: &Geometry) -> Self {
        Self {
            n,
            j: (n - 1) as f64 / 2.0,
            energy: energy_unchecked(n, geom),
            degeneracy: 2 * n * n,
        }
    }
}

#[inline]
pub(crate) fn energy_unchecked(n: u64, geom: &Geometry) -> f64 {
    // n^2 - 1 = (n - 1)(n + 1) avoids cancellation and is exact for n < 2^26.
    let n = n as f64;
    ((n - 1.0) * (n + 1.0)).sqrt() / geom.radius
}

/// Energy of level `n`: `sqrt(n^2 - 1) / R`; exactly zero for `n = 1`.
pub fn mode_energy(n: u64, geom: &Geometry) -> Result<f64> {
    if n < 1 {
        return Err(Error::invalid("n", "level index must be >= 1"));
    }
    Ok(energy_unchecked(n, geom))
}

/// Number of one-photon states at level `n`: `2 n^2`.
pub fn degeneracy(n: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::invalid("n", "level index must be >= 1"));
    }
    Ok(2 * n * n)
}

/// All levels with `0 < energy <= cutoff`, ascending from `n = 2`.
pub fn enumerate_levels(geom: &Geometry, energy_cutoff: f64) -> Result<Vec<ModeLevel>> {
    if !(energy_cutoff > 0.0 && energy_cutoff.is_finite()) {
        return Err(Error::invalid("energy_cutoff", format!("must be positive, got {energy_cutoff}")));
    }
    Ok((2..)
        .map(|n| ModeLevel::at(n, geom))
        .take_while(|level| level.energy <= energy_cutoff)
        .collect())
}

/// `sum_{n=1}^{n_max} 2 n^2 = n_max (n_max + 1) (2 n_max + 1) / 3`, zero mode included.
pub fn cumulative_state_count(n_max: u64) -> Result<u64> {
    if n_max < 1 {
        return Err(Error::invalid("n_max", "must be >= 1"));
    }
    Ok(n_max * (n_max + 1) * (2 * n_max + 1) / 3)
}
