//! How fast the discrete sum approaches the continuum, and the closed forms approach both.
use s3_radiation::thermo::relative_deviation;
use s3_radiation::{Evaluator, ThermoState};

fn main() -> s3_radiation::Result<()> {
    println!("{:>6} {:>11} {:>11} {:>11}", "RT", "exact/quad", "asym/quad", "asym/exact");
    for rt in [0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0] {
        let state = ThermoState::from_radius_temperature(1.0, rt)?;
        let exact = Evaluator::exact().report(&state)?;
        let quad = Evaluator::quadrature().report(&state)?;
        let asym = Evaluator::Asymptotic.report(&state)?;
        let dev = |a: f64, b: f64| relative_deviation(Some(a), Some(b)).unwrap();
        println!(
            "{rt:>6} {:>11.3e} {:>11.3e} {:>11.3e}",
            dev(exact.energy, quad.energy),
            dev(asym.energy, quad.energy),
            dev(asym.energy, exact.energy)
        );
    }
    Ok(())
}
