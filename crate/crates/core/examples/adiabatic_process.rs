use s3_radiation::processes::{adiabat_trajectory, rt_drift};
use s3_radiation::{Evaluator, ThermoState};

fn main() -> s3_radiation::Result<()> {
    for eval in [Evaluator::quadrature(), Evaluator::exact()] {
        let s0 = eval.entropy(&ThermoState::from_radius_temperature(1.0, 2.0)?)?;
        let points = adiabat_trajectory(s0, 1.0, 10.0, 6, &eval)?;
        println!("{} adiabat, S = {s0:.6}", eval.method());
        for p in &points {
            println!("  R {:>8.4}  T {:>10.6}  RT {:.12}  P {:.6e}", p.radius, p.temperature, p.rt, p.report.pressure);
        }
        println!("  RT drift {:.2e}", rt_drift(&points));
    }
    Ok(())
}
