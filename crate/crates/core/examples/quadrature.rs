//! The numerical building blocks on their own.
use s3_radiation::numerics::{bose_integral, find_root, integrate_semi_infinite, QuadratureSettings, ZETA};

fn main() -> s3_radiation::Result<()> {
    let settings = QuadratureSettings::default();
    let planck = integrate_semi_infinite(|x| x.powi(3) / x.exp_m1(), &settings)?;
    println!("int x^3/(e^x-1) = {planck:.15} (pi^4/15 = {:.15})", std::f64::consts::PI.powi(4) / 15.0);
    println!("Gamma(4) zeta(4) = {:.15}", bose_integral(4)?);

    let log = integrate_semi_infinite(|x| x * (-(-x).exp()).ln_1p(), &settings)?;
    println!("int x ln(1-e^-x) = {log:.15} (-zeta3 = {:.15})", -ZETA.zeta3);

    let wien = find_root(|x: f64| 3.0 * (-x).exp_m1() + x, 1.0, 5.0, 1e-15)?;
    println!("Wien constant {wien:.15}");
    Ok(())
}
