//! Adiabats, the spectral peak, the free-space reference and the
//! equation-of-state residual.

use std::f64::consts::PI;

use serde::Serialize;

use crate::asymptotics::{self, eos_density_from_pressure};
use crate::continuum;
use crate::error::{Error, Result};
use crate::modesum;
use crate::numerics::{find_root, QuadratureSettings, ZETA};
use crate::spectrum::Geometry;
use crate::thermo::{Method, Quality, ThermoReport, ThermoState};

/// Relative tolerance of the adiabat temperature solve.
pub const ADIABAT_TOL: f64 = 1e-12;

/// How a quantity is evaluated, with the tolerance each method needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Evaluator {
    ExactSum { rel_tol: f64 },
    Quadrature(QuadratureSettings),
    Asymptotic,
}

impl Evaluator {
    pub fn exact() -> Self {
        Evaluator::ExactSum { rel_tol: 1e-12 }
    }

    pub fn quadrature() -> Self {
        Evaluator::Quadrature(QuadratureSettings::default())
    }

    /// Default evaluator for `method`.
    pub fn for_method(method: Method) -> Self {
        match method {
            Method::ExactSum => Self::exact(),
            Method::Quadrature => Self::quadrature(),
            Method::Asymptotic => Evaluator::Asymptotic,
        }
    }

    pub fn method(&self) -> Method {
        match self {
            Evaluator::ExactSum { .. } => Method::ExactSum,
            Evaluator::Quadrature(_) => Method::Quadrature,
            Evaluator::Asymptotic => Method::Asymptotic,
        }
    }

    pub fn report(&self, state: &ThermoState) -> Result<ThermoReport> {
        match self {
            Evaluator::ExactSum { rel_tol } => modesum::exact_report(state, *rel_tol),
            Evaluator::Quadrature(settings) => continuum::thermo_report(state, settings),
            Evaluator::Asymptotic => Ok(asymptotics::asymptotic_report(state)),
        }
    }

    pub fn entropy(&self, state: &ThermoState) -> Result<f64> {
        match self {
            Evaluator::Asymptotic => Ok(asymptotics::entropy_asym(state)),
            Evaluator::Quadrature(settings) => continuum::entropy(state, settings),
            Evaluator::ExactSum { .. } => Ok(self.report(state)?.entropy),
        }
    }
}

/// Temperature at which `16 zeta(4) R^3 T^3 + 2 zeta(2) R T = s0`.
fn asymptotic_seed(geom: &Geometry, s0: f64) -> Result<f64> {
    let r = geom.radius();
    let cubic_only = (s0 / (16.0 * ZETA.zeta4 * r.powi(3))).cbrt();
    let linear_only = s0 / (2.0 * ZETA.zeta2 * r);
    // The smaller single-term root overshoots s0 at t and undershoots it at t / 10.
    let t = cubic_only.min(linear_only);
    let residual = |temp: f64| 16.0 * ZETA.zeta4 * r.powi(3) * temp.powi(3) + 2.0 * ZETA.zeta2 * r * temp - s0;
    find_root(residual, t / 10.0, t, ADIABAT_TOL)
}

const BRACKET_EXPANSIONS: usize = 40;

/// The temperature `T` with `S(R, T) = s0`.
pub fn adiabat_temperature(geom: &Geometry, s0: f64, evaluator: &Evaluator) -> Result<f64> {
    if !(s0 > 0.0 && s0.is_finite()) {
        return Err(Error::invalid("entropy", format!("must be positive, got {s0}")));
    }
    let seed = asymptotic_seed(geom, s0)?;
    if let Evaluator::Asymptotic = evaluator {
        return Ok(seed);
    }

    let residual = |t: f64| -> Result<f64> { Ok(evaluator.entropy(&ThermoState::new(*geom, t)?)? - s0) };
    let (mut lo, mut hi) = (seed / 10.0, seed * 10.0);
    let (mut r_lo, mut r_hi) = (residual(lo)?, residual(hi)?);
    let mut expansions = 0;
    while r_lo.signum() == r_hi.signum() && r_lo != 0.0 && r_hi != 0.0 {
        if expansions == BRACKET_EXPANSIONS {
            return Err(Error::InvalidBracket {
                lo,
                hi,
                f_lo: r_lo,
                f_hi: r_hi,
            });
        }
        // S increases with T: move whichever end is on the wrong side.
        if r_hi < 0.0 {
            lo = hi;
            r_lo = r_hi;
            hi *= 10.0;
            r_hi = residual(hi)?;
        } else {
            hi = lo;
            r_hi = r_lo;
            lo /= 10.0;
            r_lo = residual(lo)?;
        }
        expansions += 1;
    }

    // Evaluation failures inside the search surface after it finishes.
    let failure = std::cell::RefCell::new(None);
    let root = find_root(
        |t| {
            residual(t).unwrap_or_else(|e| {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            })
        },
        lo,
        hi,
        ADIABAT_TOL,
    );
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    root
}

/// One solved point on an adiabat.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AdiabatPoint {
    pub radius: f64,
    pub temperature: f64,
    pub rt: f64,
    pub report: ThermoReport,
}

/// Points at geometrically spaced radii from `r_min` to `r_max` sharing entropy `s0`.
pub fn adiabat_trajectory(
    s0: f64,
    r_min: f64,
    r_max: f64,
    steps: usize,
    evaluator: &Evaluator,
) -> Result<Vec<AdiabatPoint>> {
    if !(r_min > 0.0 && r_min < r_max && r_max.is_finite()) {
        return Err(Error::invalid("r_min", format!("need 0 < r_min < r_max, got [{r_min}, {r_max}]")));
    }
    if steps < 2 {
        return Err(Error::invalid("steps", "need at least two points"));
    }
    let ratio = (r_max / r_min).powf(1.0 / (steps - 1) as f64);
    (0..steps)
        .map(|k| {
            let radius = if k == steps - 1 { r_max } else { r_min * ratio.powi(k as i32) };
            let point = || -> Result<AdiabatPoint> {
                let geom = Geometry::new(radius)?;
                let temperature = adiabat_temperature(&geom, s0, evaluator)?;
                let state = ThermoState::new(geom, temperature)?;
                Ok(AdiabatPoint {
                    radius,
                    temperature,
                    rt: state.rt(),
                    report: evaluator.report(&state)?,
                })
            };
            point().map_err(|e| Error::AtRadius {
                radius,
                source: Box::new(e),
            })
        })
        .collect()
}

/// Largest `|RT / RT_0 - 1|` along a trajectory; the exact-sum adiabat reports this
/// instead of asserting constancy.
pub fn rt_drift(points: &[AdiabatPoint]) -> f64 {
    let Some(first) = points.first() else {
        return 0.0;
    };
    points.iter().map(|p| (p.rt / first.rt - 1.0).abs()).fold(0.0, f64::max)
}

/// `d/dx ln u(x; a) = 2/x + x/(x^2 + a^2) - 1/(1 - e^-x)`.
pub fn spectral_log_slope(x: f64, a: f64) -> f64 {
    2.0 / x + x / (x * x + a * a) + 1.0 / (-x).exp_m1()
}

/// Location of the maximum of the modified Planck density.
///
/// The maximum lies between the `a -> inf` limit (root of `2(1 - e^-x) = x`,
/// about 1.594) and the free-space Wien value 2.8214.
pub fn wien_peak(a: f64) -> Result<f64> {
    if !(a >= 0.0 && a.is_finite()) {
        return Err(Error::invalid("a", format!("must be non-negative, got {a}")));
    }
    find_root(|x| spectral_log_slope(x, a), 0.5, 3.0, 1e-14)
}

/// Free-space black-body values in the volume `2 pi^2 R^3`.
pub fn free_space_reference(state: &ThermoState) -> ThermoReport {
    let volume = state.volume();
    let t = state.temperature();
    let t3 = t.powi(3);
    let energy = PI * PI / 15.0 * volume * t3 * t;
    let free_energy = -PI * PI / 45.0 * volume * t3 * t;
    ThermoReport {
        method: Method::Asymptotic,
        radius: state.radius(),
        temperature: t,
        photon_number: Some(2.0 * ZETA.zeta3 / (PI * PI) * volume * t3),
        energy,
        free_energy,
        grand_potential: free_energy,
        pressure: PI * PI / 45.0 * t3 * t,
        entropy: 4.0 * PI * PI / 45.0 * volume * t3,
        energy_density: PI * PI / 15.0 * t3 * t,
        volume,
        quality: Quality::Reliable,
    }
}

/// `rho_E - (3P - c sqrt(P) / R^2)` for the chosen method.
pub fn eos_residual(state: &ThermoState, evaluator: &Evaluator) -> Result<f64> {
    let report = evaluator.report(state)?;
    Ok(report.energy_density - eos_density_from_pressure(report.pressure, &state.geometry)?)
}
