//! Bose-Einstein sums over the discrete spectrum, `n >= 2`.
//!
//! Terms are accumulated in ascending `n` with Neumaier compensation. The
//! sum stops once [`QUIET_RUN`] consecutive levels past the occupancy peak
//! each contribute less than `rel_tol * 1e-2` of the running total for all
//! of `N`, `U` and `F`; a geometric tail estimate is then added.

use crate::error::{Error, Result};
use crate::spectrum::energy_unchecked;
use crate::thermo::{Method, ThermoReport, ThermoState};

/// Largest level index the sum may reach.
pub const LEVEL_BUDGET: u64 = 10_000_000;

/// Consecutive negligible levels required before stopping.
pub const QUIET_RUN: u32 = 16;

/// Compensated (Neumaier) running sum.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

#[derive(Debug, Clone, Copy)]
struct Terms {
    number: f64,
    energy: f64,
    free: f64,
}

fn level_terms(state: &ThermoState, n: u64) -> Terms {
    let t = state.temperature();
    let energy = energy_unchecked(n, &state.geometry);
    let x = energy / t;
    let g = (2 * n * n) as f64;
    let number = g / x.exp_m1();
    Terms {
        number,
        energy: number * energy,
        free: t * g * (-(-x).exp_m1()).ln(),
    }
}

/// Mean photon count at level `n`: `2 n^2 / (e^{e_n / T} - 1)`.
pub fn level_occupancy(state: &ThermoState, n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::invalid("n", "the zero mode n = 1 is excluded; need n >= 2"));
    }
    Ok(level_terms(state, n).number)
}

/// Sum details alongside the report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumDiagnostics {
    /// Last level index summed explicitly.
    pub last_level: u64,
    /// Geometric tail estimates added for `N`, `U`, `|F|`.
    pub tail: [f64; 3],
}

/// Exact discrete-spectrum report at relative tolerance `rel_tol`.
pub fn exact_report(state: &ThermoState, rel_tol: f64) -> Result<ThermoReport> {
    exact_report_with_budget(state, rel_tol, LEVEL_BUDGET).map(|(r, _)| r)
}

/// As [`exact_report`] with an explicit level budget.
pub fn exact_report_with_budget(
    state: &ThermoState,
    rel_tol: f64,
    budget: u64,
) -> Result<(ThermoReport, SumDiagnostics)> {
    if !(rel_tol > 0.0 && rel_tol <= 1e-4) {
        return Err(Error::invalid("rel_tol", format!("must lie in (0, 1e-4], got {rel_tol}")));
    }
    let threshold = rel_tol * 1e-2;
    let mut sums = [CompensatedSum::default(); 3];
    let mut quiet = 0u32;
    let mut previous: Option<[f64; 3]> = None;
    let mut ratio = 0.0f64;

    for n in 2..=budget {
        let terms = level_terms(state, n);
        let current = [terms.number, terms.energy, terms.free.abs()];
        for (sum, term) in sums.iter_mut().zip(current) {
            sum.add(term);
        }

        let descending = previous.is_some_and(|p| current.iter().zip(p).all(|(c, p)| *c <= p));
        let negligible = sums
            .iter()
            .zip(current)
            .all(|(sum, term)| term == 0.0 || term < threshold * sum.value());

        if descending && negligible {
            let p = previous.expect("descending implies a previous level");
            for (c, p) in current.iter().zip(p) {
                if p > 0.0 {
                    ratio = ratio.max(c / p);
                }
            }
            quiet += 1;
        } else {
            quiet = 0;
            ratio = 0.0;
        }
        previous = Some(current);

        if quiet >= QUIET_RUN {
            return Ok(finish(state, sums, current, ratio, n));
        }
    }
    Err(Error::LevelBudgetExhausted { budget })
}

fn finish(state: &ThermoState, mut sums: [CompensatedSum; 3], last: [f64; 3], ratio: f64, n: u64) -> (ThermoReport, SumDiagnostics) {
    // Past the peak successive terms shrink at least as fast as the largest
    // observed ratio, so the tail is bounded by a geometric series.
    let tail = if ratio < 1.0 {
        last.map(|term| term * ratio / (1.0 - ratio))
    } else {
        [0.0; 3]
    };
    for (sum, t) in sums.iter_mut().zip(tail) {
        sum.add(t);
    }
    let [number, energy, free_abs] = sums.map(|s| s.value());
    let report = ThermoReport::assemble(Method::ExactSum, state, Some(number), energy, -free_abs);
    (
        report,
        SumDiagnostics {
            last_level: n,
            tail,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state(r: f64, t: f64) -> ThermoState {
        ThermoState::from_radius_temperature(r, t).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    /// Uncompensated sum to a fixed n; independent of the truncation logic.
    fn brute_force(s: &ThermoState, n_max: u64) -> [f64; 3] {
        let (r, t) = (s.radius(), s.temperature());
        let mut out = [0.0; 3];
        for n in 2..=n_max {
            let e = ((n * n - 1) as f64).sqrt() / r;
            let g = 2.0 * (n * n) as f64;
            let occ = g / ((e / t).exp() - 1.0);
            out[0] += occ;
            out[1] += occ * e;
            out[2] += t * g * (1.0 - (-e / t).exp()).ln();
        }
        out
    }

    // 40-digit values at R = T = 1 from an offline mpmath sum.
    const N_11: f64 = 4.280065751076003386;
    const U_11: f64 = 13.19996855926812121;
    const F_11: f64 = -4.075154645179301349;
    const S_11: f64 = 17.27512320444742256;

    #[test]
    fn unit_state_reference() {
        let s = state(1.0, 1.0);
        let r = exact_report(&s, 1e-12).unwrap();
        assert!(rel(r.photon_number.unwrap(), N_11) < 1e-12);
        assert!(rel(r.energy, U_11) < 1e-12);
        assert!(rel(r.free_energy, F_11) < 1e-12);
        assert!(rel(r.entropy, S_11) < 1e-12);
        assert_eq!(r.method, Method::ExactSum);

        let brute = brute_force(&s, 1_000_000);
        assert!(rel(brute[0], N_11) < 1e-12);
        assert!(rel(brute[1], U_11) < 1e-12);
        assert!(rel(brute[2], F_11) < 1e-12);
    }

    #[test]
    fn matches_brute_force_at_higher_temperature() {
        let s = state(1.0, 20.0);
        let r = exact_report(&s, 1e-10).unwrap();
        let brute = brute_force(&s, 100_000);
        assert!(rel(r.photon_number.unwrap(), brute[0]) < 1e-10);
        assert!(rel(r.energy, brute[1]) < 1e-10);
        assert!(rel(r.free_energy, brute[2]) < 1e-10);
    }

    #[test]
    fn gapped_low_temperature() {
        let s = state(1.0, 0.01);
        let r = exact_report(&s, 1e-10).unwrap();
        let gap = (-(3f64.sqrt()) / 0.01).exp();
        assert!(rel(r.photon_number.unwrap(), 8.0 * gap) < 1e-10);
        assert!(r.energy < 1e-70 && r.entropy < 1e-70);
        assert!(r.free_energy <= 0.0);

        let frozen = exact_report(&state(1.0, 1e-4), 1e-10).unwrap();
        assert_eq!(frozen.photon_number, Some(0.0));
        assert_eq!(frozen.energy, 0.0);
    }

    #[test]
    fn occupancy() {
        let s = state(1.0, 1.0);
        let n2 = level_occupancy(&s, 2).unwrap();
        assert!(rel(n2, 8.0 / (3f64.sqrt().exp() - 1.0)) < 1e-15);
        assert!(rel(n2, 1.719604078499126365) < 1e-15);
        assert!(level_occupancy(&s, 1).is_err());
        assert!(level_occupancy(&state(1.0, 1e-3), 2).unwrap() < 1e-300);

        let per_state: Vec<f64> = (2..200)
            .map(|n| level_occupancy(&s, n).unwrap() / (2 * n * n) as f64)
            .collect();
        assert!(per_state.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn tight_budget_fails_loudly() {
        let err = exact_report_with_budget(&state(1.0, 50.0), 1e-10, 100).unwrap_err();
        assert_eq!(err, Error::LevelBudgetExhausted { budget: 100 });
        assert!(exact_report(&state(1.0, 1.0), 1e-3).is_err());
    }

    #[test]
    fn doubling_budget_is_stable() {
        let s = state(2.0, 3.0);
        let (r, diag) = exact_report_with_budget(&s, 1e-10, LEVEL_BUDGET).unwrap();
        let twice = brute_force(&s, 2 * diag.last_level);
        assert!(rel(r.energy, twice[1]) < 1e-10);
        assert!(rel(r.photon_number.unwrap(), twice[0]) < 1e-10);
    }

    #[test]
    fn report_identities() {
        let s = state(1.3, 4.1);
        let r = exact_report(&s, 1e-10).unwrap();
        assert_eq!(r.grand_potential, r.free_energy);
        assert!(rel(r.entropy, (r.energy - r.free_energy) / s.temperature()) < 1e-12);
        assert!(rel(r.pressure, -r.free_energy / s.volume()) < 1e-12);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = CompensatedSum::default();
        s.add(1.0);
        for _ in 0..1000 {
            s.add(1e-17);
        }
        assert!((s.value() - (1.0 + 1e-14)).abs() < 1e-17);
    }
}
