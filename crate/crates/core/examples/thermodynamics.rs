use s3_radiation::{Evaluator, Method, ThermoState};

fn main() -> s3_radiation::Result<()> {
    let state = ThermoState::from_radius_temperature(1.0, 3.0)?;
    for method in Method::ALL {
        let r = Evaluator::for_method(method).report(&state)?;
        let n = r.photon_number.map_or("-".to_string(), |n| format!("{n:.6}"));
        println!(
            "{:<11} N {:>12}  U {:>12.6}  F {:>12.6}  S {:>10.6}  P {:.6e}  {:?}",
            method.as_str(),
            n,
            r.energy,
            r.free_energy,
            r.entropy,
            r.pressure,
            r.quality
        );
    }
    Ok(())
}
