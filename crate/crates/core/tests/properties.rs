use proptest::prelude::*;
use s3_radiation::numerics::{find_root, QuadratureSettings};
use s3_radiation::spectrum::{degeneracy, enumerate_levels, mode_energy, Geometry};
use s3_radiation::{asymptotics, continuum, modesum, ThermoState};

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(f64::MIN_POSITIVE)
}

fn state(r: f64, t: f64) -> ThermoState {
    ThermoState::from_radius_temperature(r, t).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn energy_squared_identity(n in 2u64..100_000, r in 1e-3f64..1e3) {
        let geom = Geometry::new(r).unwrap();
        let e = mode_energy(n, &geom).unwrap();
        let nf = n as f64;
        prop_assert!(close((e * r).powi(2), nf * nf - 1.0, 1e-12));
        prop_assert_eq!(degeneracy(n).unwrap(), 2 * n * n);
    }

    #[test]
    fn levels_strictly_increase(r in 0.1f64..10.0, cutoff in 0.0f64..200.0) {
        let geom = Geometry::new(r).unwrap();
        let levels = enumerate_levels(&geom, cutoff).unwrap();
        prop_assert!(levels.windows(2).all(|w| w[1].energy > w[0].energy && w[1].n == w[0].n + 1));
        prop_assert!(levels.iter().all(|l| l.energy <= cutoff));
        if let Some(first) = levels.first() {
            prop_assert_eq!(first.n, 2);
        }
    }

    #[test]
    fn compact_spectrum_dominates(x in 1e-3f64..60.0, a in 1e-6f64..50.0) {
        let m = continuum::spectral_density(x, a);
        let f = continuum::spectral_density(x, 0.0);
        prop_assert!(m > f || (f == 0.0 && m == 0.0));
    }

    #[test]
    fn closed_form_identities(r in 0.1f64..10.0, t in 0.1f64..10.0) {
        let s = state(r, t);
        let u = asymptotics::energy_asym(&s);
        let f = asymptotics::free_energy_asym(&s);
        let v = s.volume();
        prop_assert!(close(asymptotics::entropy_asym(&s), (u - f) / t, 1e-12));
        prop_assert!(close(asymptotics::pressure_asym(&s), -f / v, 1e-12));
        prop_assert!(close(asymptotics::energy_density_asym(&s), u / v, 1e-12));
    }

    #[test]
    fn root_is_bracket_independent(target in 0.5f64..20.0, lo_pad in 0.01f64..0.4, hi_pad in 0.1f64..30.0) {
        let f = |x: f64| x.ln() - target.ln();
        let root = find_root(f, target * (1.0 - lo_pad), target + hi_pad, 1e-14).unwrap();
        prop_assert!(close(root, target, 1e-12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quadrature_depends_on_rt_only(r in 0.2f64..5.0, t in 0.2f64..5.0, k in 0usize..3) {
        let lambda = [0.5, 2.0, 5.0][k];
        let q = QuadratureSettings::default();
        let base = state(r, t);
        let scaled = state(lambda * r, t / lambda);
        let n0 = continuum::photon_number(&base, &q).unwrap();
        let n1 = continuum::photon_number(&scaled, &q).unwrap();
        prop_assert!(close(n1, n0, 1e-9));
        let s0 = continuum::entropy(&base, &q).unwrap();
        let s1 = continuum::entropy(&scaled, &q).unwrap();
        prop_assert!(close(s1, s0, 1e-9));

        // U and F carry one power of T, P carries four.
        let u0 = continuum::internal_energy(&base, &q).unwrap();
        let u1 = continuum::internal_energy(&scaled, &q).unwrap();
        prop_assert!(close(lambda * u1, u0, 1e-9));
        let f0 = continuum::free_energy(&base, &q).unwrap();
        let f1 = continuum::free_energy(&scaled, &q).unwrap();
        prop_assert!(close(lambda * f1, f0, 1e-9));
        let p0 = continuum::pressure(&base, &q).unwrap();
        let p1 = continuum::pressure(&scaled, &q).unwrap();
        prop_assert!(close(lambda.powi(4) * p1, p0, 1e-9));
    }

    #[test]
    fn exact_sum_depends_on_rt_only(r in 0.2f64..3.0, t in 0.2f64..3.0) {
        let base = modesum::exact_report(&state(r, t), 1e-12).unwrap();
        let scaled = modesum::exact_report(&state(2.0 * r, t / 2.0), 1e-12).unwrap();
        prop_assert!(close(scaled.photon_number.unwrap(), base.photon_number.unwrap(), 1e-10));
        prop_assert!(close(scaled.entropy, base.entropy, 1e-10));
        prop_assert!(close(2.0 * scaled.energy, base.energy, 1e-10));
    }

    #[test]
    fn exact_sum_stable_under_budget_doubling(rt in 0.05f64..20.0) {
        let s = state(1.0, rt);
        let (a, _) = modesum::exact_report_with_budget(&s, 1e-12, 100_000).unwrap();
        let (b, _) = modesum::exact_report_with_budget(&s, 1e-12, 200_000).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn discrete_sum_below_continuum(rt in 0.5f64..30.0) {
        let s = state(1.0, rt);
        let exact = modesum::exact_report(&s, 1e-12).unwrap();
        let quad = continuum::thermo_report(&s, &QuadratureSettings::default()).unwrap();
        prop_assert!(exact.photon_number.unwrap() < quad.photon_number.unwrap());
        prop_assert!(exact.entropy < quad.entropy);
    }
}
