//! Trivial, achievable and correlation-constrained bounds for the three catalog sources.

use sumrate::bounds::{self, OptimizerConfig};
use sumrate::catalog;

fn main() -> sumrate::Result<()> {
    let ch = catalog::averaging_channel();
    let cfg = OptimizerConfig::default();
    println!("{:>9} {:>6} {:>7} {:>7} {:>7} {:>7}  verdict", "source", "H", "lambda2", "trivial", "achv", "upper");
    for (name, src) in catalog::sources() {
        let r = bounds::assess(&src, &ch, &cfg)?;
        println!(
            "{name:>9} {:>6.3} {:>7.4} {:>7.3} {:>7.3} {:>7.3}  {}",
            r.source_entropy, r.lambda2_uv, r.trivial_bound, r.achievable_rate, r.upper_bound, r.verdict
        );
    }

    let sparse = catalog::sparse_source();
    let a = bounds::achievable_sum_rate(&sparse, &ch, &cfg)?;
    println!("\nbest encoders for the sparse source (restart {}):", a.best_restart);
    println!("p(x1 | u) =\n{:?}", a.encoder_x1.matrix());
    println!("p(x2 | v) =\n{:?}", a.encoder_x2.matrix());
    Ok(())
}
