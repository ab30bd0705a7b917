//! lambda2 = 1 exactly when the joint splits into blocks with no cross mass.

use sumrate::spectral::{self, detect_decomposition};
use sumrate::JointDistribution;

fn main() -> sumrate::Result<()> {
    let split = JointDistribution::from_rows(&[
        [0.2, 0.0, 0.1, 0.0],
        [0.0, 0.3, 0.0, 0.0],
        [0.1, 0.0, 0.1, 0.0],
        [0.0, 0.1, 0.0, 0.1],
    ])?;
    let joined = JointDistribution::from_rows(&[[0.4, 0.1], [0.1, 0.4]])?;

    for (name, j) in [("split", &split), ("joined", &joined)] {
        let l2 = spectral::lambda2(j)?;
        match detect_decomposition(j) {
            Some(d) => println!("{name}: lambda2 = {l2:.6}, rows {:?} pair with cols {:?}", d.s1, d.s2),
            None => println!("{name}: lambda2 = {l2:.6}, no decomposition"),
        }
    }
    Ok(())
}
