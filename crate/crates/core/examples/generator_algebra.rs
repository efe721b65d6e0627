use s3_radiation::spectrum::{build_generators, HalfInteger, So4Pair};

fn main() -> s3_radiation::Result<()> {
    for doubled in 0..=6 {
        let j = HalfInteger::from_doubled(doubled);
        let set = build_generators(j);
        let pair = So4Pair::new(j);
        let c = pair.casimir_residuals();
        println!(
            "j = {:<4} dim {:>3}  [J,J] residual {:.1e}  J^2 residual {:.1e}  so(4) worst {:.1e}",
            j.value(),
            set.dimension(),
            set.commutator_residual(),
            set.casimir_residual(),
            c.max().max(pair.algebra_residual()),
        );
    }
    Ok(())
}
