//! Spectral density on the sphere against the flat-space curve.
//!
//! Pass `RT` as the first argument (default 1).
use s3_radiation::continuum::spectral_density;
use s3_radiation::processes::wien_peak;

fn main() -> s3_radiation::Result<()> {
    let rt: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1.0);
    let a = 1.0 / rt;
    for i in 1..=24 {
        let x = 0.5 * i as f64;
        let (m, f) = (spectral_density(x, a), spectral_density(x, 0.0));
        let bar = "#".repeat((m * 10.0).round() as usize);
        println!("{x:5.1} {m:9.5} {f:9.5} {bar}");
    }
    println!("peak at x = {:.6} (flat space {:.6})", wien_peak(a)?, wien_peak(0.0)?);
    Ok(())
}
