//! Lowest levels of the conformally coupled photon on a sphere of radius 2.
use s3_radiation::spectrum::{cumulative_state_count, enumerate_levels, Geometry};

fn main() -> s3_radiation::Result<()> {
    let geom = Geometry::new(2.0)?;
    println!("{:>4} {:>5} {:>12} {:>6}", "n", "j", "energy", "g");
    for level in enumerate_levels(&geom, 3.0)? {
        println!("{:>4} {:>5} {:>12.8} {:>6}", level.n, level.j, level.energy, level.degeneracy);
    }
    for n_max in [10, 100, 1000] {
        // (2/3) n^3 is the continuum estimate.
        let count = cumulative_state_count(n_max)?;
        let smooth = 2.0 * (n_max as f64).powi(3) / 3.0;
        println!("states up to n = {n_max}: {count} (continuum {smooth:.1})");
    }
    Ok(())
}
