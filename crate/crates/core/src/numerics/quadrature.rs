//! Adaptive Gauss-Kronrod (10/21 point) quadrature on `[0, inf)`.
//!
//! The half line is first truncated at the point where the integrand falls
//! below `floor * peak` (scanned on a fixed grid), then the finite interval
//! is split at geometric breakpoints and refined by global adaptive bisection
//! of the interval with the largest error estimate.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208647322481,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

// Gauss weights for the odd-indexed Kronrod nodes.
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

/// Controls for [`integrate_semi_infinite`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    /// Target relative error, in `(0, 1e-4]`.
    pub rel_tol: f64,
    /// Truncation threshold relative to the running peak of `|f|`; also the
    /// absolute error floor.
    pub floor: f64,
    /// Grid spacing of the truncation scan.
    pub scan_step: f64,
    /// The scan gives up past this abscissa.
    pub scan_limit: f64,
    /// Maximum number of subintervals.
    pub max_intervals: usize,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            floor: 1e-300,
            scan_step: 0.5,
            scan_limit: 1e4,
            max_intervals: 4000,
        }
    }
}

impl QuadratureSettings {
    pub fn with_rel_tol(rel_tol: f64) -> Result<Self> {
        let settings = Self {
            rel_tol,
            ..Self::default()
        };
        settings.validate()?;
        Ok(settings)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-4) {
            return Err(Error::invalid("rel_tol", format!("must lie in (0, 1e-4], got {}", self.rel_tol)));
        }
        if !(self.floor >= 0.0 && self.floor < 1.0) {
            return Err(Error::invalid("floor", format!("must lie in [0, 1), got {}", self.floor)));
        }
        if !(self.scan_step > 0.0 && self.scan_limit > self.scan_step) {
            return Err(Error::invalid("scan_step", "scan grid must be non-empty"));
        }
        if self.max_intervals == 0 {
            return Err(Error::invalid("max_intervals", "must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.lo.total_cmp(&self.lo))
    }
}

/// One 21-point Kronrod estimate with the QUADPACK error heuristic.
fn kronrod21<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Segment {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let f_center = f(center);

    let mut kronrod = WGK[10] * f_center;
    let mut gauss = 0.0;
    let mut abs_sum = kronrod.abs();
    let mut samples = [(0.0, 0.0); 10];
    for (k, sample) in samples.iter_mut().enumerate() {
        let dx = half * XGK[k];
        let pair = (f(center - dx), f(center + dx));
        kronrod += WGK[k] * (pair.0 + pair.1);
        abs_sum += WGK[k] * (pair.0.abs() + pair.1.abs());
        if k % 2 == 1 {
            gauss += WG[k / 2] * (pair.0 + pair.1);
        }
        *sample = pair;
    }

    let mean = 0.5 * kronrod;
    let mut asc = WGK[10] * (f_center - mean).abs();
    for (k, (a, b)) in samples.iter().enumerate() {
        asc += WGK[k] * ((a - mean).abs() + (b - mean).abs());
    }

    let value = kronrod * half;
    let res_abs = abs_sum * half.abs();
    let res_asc = asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Segment { lo, hi, value, error }
}

/// Locate the truncation point: the first grid abscissa past the peak where
/// `|f|` drops to `floor * peak` or below.
fn truncation_point<F: Fn(f64) -> f64>(f: &F, settings: &QuadratureSettings) -> Result<f64> {
    let mut peak = 0.0f64;
    let mut k = 1u64;
    loop {
        let x = settings.scan_step * k as f64;
        if x > settings.scan_limit {
            return Err(Error::TruncationNotFound { reached: settings.scan_limit });
        }
        let v = f(x).abs();
        if !v.is_finite() {
            return Err(Error::invalid("integrand", format!("non-finite value at x = {x}")));
        }
        peak = peak.max(v);
        if peak > 0.0 && v <= settings.floor * peak {
            return Ok(x);
        }
        k += 1;
    }
}

/// Integrate `f` over `(0, inf)`.
///
/// `f` must be integrable at zero (it is never evaluated there) and decay at
/// least exponentially. An integrand that vanishes on the whole scan grid
/// integrates to zero.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: F, settings: &QuadratureSettings) -> Result<f64> {
    settings.validate()?;
    let upper = match truncation_point(&f, settings) {
        Ok(x) => x,
        Err(Error::TruncationNotFound { .. })
            if (1..=(settings.scan_limit / settings.scan_step) as u64)
                .all(|k| f(settings.scan_step * k as f64) == 0.0) =>
        {
            return Ok(0.0)
        }
        Err(e) => return Err(e),
    };
    integrate_finite(&f, upper, settings)
}

fn integrate_finite<F: Fn(f64) -> f64>(f: &F, upper: f64, settings: &QuadratureSettings) -> Result<f64> {
    // Breakpoints 0, 1/8, 1/4, ..., 1, 2, 4, ... below `upper`.
    let mut cuts = vec![0.0];
    let mut x = 0.125;
    while x < upper {
        cuts.push(x);
        x *= 2.0;
    }
    cuts.push(upper);

    let mut heap: BinaryHeap<Segment> = cuts.windows(2).map(|w| kronrod21(f, w[0], w[1])).collect();

    loop {
        let (value, error) = totals(&heap);
        if !value.is_finite() {
            return Err(Error::invalid("integrand", "non-finite integral estimate"));
        }
        let target = (settings.rel_tol * value.abs()).max(settings.floor);
        if error <= target {
            return Ok(value);
        }
        if heap.len() >= settings.max_intervals {
            return Err(Error::QuadratureNonConvergence {
                intervals: heap.len(),
                estimate: value,
                error,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            // Interval cannot be split further in double precision.
            return Err(Error::QuadratureNonConvergence {
                intervals: heap.len() + 1,
                estimate: value,
                error,
            });
        }
        heap.push(kronrod21(f, worst.lo, mid));
        heap.push(kronrod21(f, mid, worst.hi));
    }
}

/// Sum in ascending position order so the result does not depend on heap layout.
fn totals(heap: &BinaryHeap<Segment>) -> (f64, f64) {
    let mut segments: Vec<&Segment> = heap.iter().collect();
    segments.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    let value = segments.iter().map(|s| s.value).sum();
    let error = segments.iter().map(|s| s.error).sum();
    (value, error)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn settings() -> QuadratureSettings {
        QuadratureSettings::default()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn planck_integral() {
        let v = integrate_semi_infinite(|x: f64| x.powi(3) / x.exp_m1(), &settings()).unwrap();
        assert!(rel(v, PI.powi(4) / 15.0) < 1e-12, "{v}");
    }

    #[test]
    fn zeta_two_integral() {
        let v = integrate_semi_infinite(|x: f64| x / x.exp_m1(), &settings()).unwrap();
        assert!(rel(v, PI * PI / 6.0) < 1e-12, "{v}");
    }

    #[test]
    fn modified_planck_integral_matches_reference() {
        // 40-digit reference computed offline with mpmath.
        let reference = 7.099815043642018693567;
        let v = integrate_semi_infinite(|x: f64| x * x * (x * x + 1.0).sqrt() / x.exp_m1(), &settings()).unwrap();
        assert!(rel(v, reference) < 1e-12, "{v}");
    }

    #[test]
    fn log_singularity_at_origin() {
        // int_0^inf x ln(1 - e^-x) dx = -zeta(3)
        let v = integrate_semi_infinite(|x: f64| x * (-(-x).exp_m1()).ln(), &settings()).unwrap();
        assert!(rel(v, -1.2020569031595942) < 1e-12, "{v}");
    }

    #[test]
    fn identically_zero_integrand() {
        assert_eq!(integrate_semi_infinite(|_| 0.0, &settings()).unwrap(), 0.0);
    }

    #[test]
    fn non_decaying_integrand_fails() {
        let err = integrate_semi_infinite(|x: f64| 1.0 / (1.0 + x), &settings()).unwrap_err();
        assert!(matches!(err, Error::TruncationNotFound { .. }));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let tight = QuadratureSettings {
            max_intervals: 8,
            ..settings()
        };
        // 1/sqrt(x) singularity needs many bisections near the origin.
        let err = integrate_semi_infinite(|x: f64| (-x).exp() / x.sqrt(), &tight).unwrap_err();
        assert!(matches!(err, Error::QuadratureNonConvergence { .. }), "{err:?}");
    }

    #[test]
    fn settings_validation() {
        assert!(QuadratureSettings::with_rel_tol(1e-3).is_err());
        assert!(QuadratureSettings::with_rel_tol(0.0).is_err());
        assert!(QuadratureSettings::with_rel_tol(1e-4).is_ok());
    }

    #[test]
    fn doubling_truncation_point_is_invariant() {
        let f = |x: f64| x * x * (x * x + 0.25).sqrt() / x.exp_m1();
        let s = settings();
        let upper = truncation_point(&f, &s).unwrap();
        let a = integrate_finite(&f, upper, &s).unwrap();
        let b = integrate_finite(&f, 2.0 * upper, &s).unwrap();
        assert!(rel(a, b) < 1e-10);
    }
}
