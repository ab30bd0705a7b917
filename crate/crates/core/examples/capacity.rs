//! Blahut-Arimoto on the composite input of a multiple-access channel gives the
//! trivial sum-rate bound, ignoring that the encoders cannot cooperate.

use sumrate::bounds::{trivial_bound, OptimizerConfig};
use sumrate::catalog;

fn main() -> sumrate::Result<()> {
    let ch = catalog::averaging_channel();
    let r = trivial_bound(&ch, &OptimizerConfig::default())?;
    println!("max I(X1,X2;Y) = {:.6} bits in {} iterations", r.value, r.iterations);
    println!("certified within [{:.9}, {:.9}]", r.value, r.upper);
    println!("argmax p(x1,x2) =\n{:?}", r.argmax.matrix());
    Ok(())
}
