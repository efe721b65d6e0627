//! Numerical kernel: half-line quadrature, Bose integrals, zeta constants,
//! root finding and finite differences.

mod quadrature;
mod roots;

pub use quadrature::{integrate_semi_infinite, QuadratureSettings};
pub use roots::{bisect, find_root};

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Riemann zeta values used by the closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaTable {
    pub zeta2: f64,
    pub zeta3: f64,
    pub zeta4: f64,
}

pub const ZETA: ZetaTable = ZetaTable {
    zeta2: PI * PI / 6.0,
    // Apery's constant, 1.2020569031595942853997...
    zeta3: 1.202_056_903_159_594_3,
    zeta4: PI * PI * PI * PI / 90.0,
};

impl ZetaTable {
    /// `zeta(s)` for `s` in `{2, 3, 4}`.
    pub fn get(&self, s: u32) -> Option<f64> {
        match s {
            2 => Some(self.zeta2),
            3 => Some(self.zeta3),
            4 => Some(self.zeta4),
            _ => None,
        }
    }
}

/// `int_0^inf x^s / (e^x - 1) dx = Gamma(s+1) zeta(s+1)`.
///
/// Accepts `s` in `1..=5`; `zeta(5)` and `zeta(6)` are stored here rather
/// than in [`ZETA`] since only the Bose integral needs them. `s = 0`
/// diverges logarithmically and is rejected.
pub fn bose_integral(s: u32) -> Result<f64> {
    const ZETA5: f64 = 1.036_927_755_143_37;
    let factorial = |k: u32| (1..=k).map(f64::from).product::<f64>();
    let zeta = match s {
        1..=3 => ZETA.get(s + 1).expect("stored"),
        4 => ZETA5,
        5 => PI.powi(6) / 945.0,
        0 => return Err(Error::invalid("s", "the s = 0 Bose integral diverges")),
        _ => return Err(Error::invalid("s", format!("no stored zeta({})", s + 1))),
    };
    Ok(factorial(s) * zeta)
}

/// Central difference `(f(x+h) - f(x-h)) / 2h`.
pub fn derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Fallible variant of [`derivative`].
pub fn try_derivative<F: Fn(f64) -> Result<f64>>(f: F, x: f64, h: f64) -> Result<f64> {
    Ok((f(x + h)? - f(x - h)?) / (2.0 * h))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta_series(s: i32) -> f64 {
        // Direct sum with an integral tail estimate; converges fast enough for s >= 3.
        let n_terms = 200_000;
        let head: f64 = (1..=n_terms).rev().map(|n| (n as f64).powi(-s)).sum();
        let n = n_terms as f64 + 0.5;
        head + n.powi(1 - s) / f64::from(s - 1)
    }

    #[test]
    fn stored_zeta_values() {
        assert!((ZETA.zeta2 - PI * PI / 6.0).abs() <= 1e-15 * ZETA.zeta2);
        assert!((ZETA.zeta4 - PI.powi(4) / 90.0).abs() <= 1e-15 * ZETA.zeta4);
        assert!((ZETA.zeta3 - zeta_series(3)).abs() <= 1e-14 * ZETA.zeta3);
        assert!((1.036_927_755_143_37 - zeta_series(5)).abs() <= 1e-14);
        assert_eq!(ZETA.get(5), None);
    }

    #[test]
    fn bose_integral_values() {
        assert!((bose_integral(3).unwrap() - 6.4939394023).abs() < 1e-9);
        assert!((bose_integral(1).unwrap() - 1.6449340668).abs() < 1e-9);
        assert!((bose_integral(2).unwrap() - 2.4041138064).abs() < 1e-9);
        assert!(bose_integral(0).is_err());
        assert!(bose_integral(6).is_err());
    }

    #[test]
    fn bose_integral_matches_quadrature() {
        let settings = QuadratureSettings::default();
        for s in 1..=5 {
            let quad = integrate_semi_infinite(|x: f64| x.powi(s as i32) / x.exp_m1(), &settings).unwrap();
            let closed = bose_integral(s).unwrap();
            assert!(((quad - closed) / closed).abs() < 1e-9, "s = {s}: {quad} vs {closed}");
        }
    }

    #[test]
    fn central_differences() {
        assert!((derivative(|x| x * x, 3.0, 1e-5) - 6.0).abs() < 1e-8);
        assert!((derivative(f64::exp, 0.0, 1e-5) - 1.0).abs() < 1e-9);
    }
}
