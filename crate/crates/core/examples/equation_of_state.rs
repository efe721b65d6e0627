use s3_radiation::asymptotics::{eos_coefficient, eos_density_from_pressure};
use s3_radiation::processes::eos_residual;
use s3_radiation::{Evaluator, ThermoState};

fn main() -> s3_radiation::Result<()> {
    println!("sqrt(P) coefficient: {:.12}", eos_coefficient());
    for rt in [2.0, 5.0, 10.0, 50.0, 200.0] {
        let state = ThermoState::from_radius_temperature(1.0, rt)?;
        let quad = Evaluator::quadrature();
        let r = quad.report(&state)?;
        let predicted = eos_density_from_pressure(r.pressure, &state.geometry)?;
        let residual = eos_residual(&state, &quad)?;
        println!(
            "RT {rt:>5}  rho {:.6e}  predicted {:.6e}  1 - 3P/rho {:.3e}  residual/rho {:.2e}",
            r.energy_density,
            predicted,
            1.0 - 3.0 * r.pressure / r.energy_density,
            residual / r.energy_density
        );
    }
    Ok(())
}
