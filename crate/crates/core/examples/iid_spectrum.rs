//! For n independent copies the spectrum is every n-fold product of single-letter values,
//! so lambda2 never grows with n.

use sumrate::{catalog, spectral, svd_small};

fn main() -> sumrate::Result<()> {
    let src = catalog::symmetric_source();
    for n in 1..=3 {
        let predicted = spectral::kron_power_spectrum(&src, n)?;
        let direct = svd_small(&src.kron_power(n)?.tilde()?)?.singular_values;
        let err = predicted.iter().zip(&direct).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        println!("n = {n}: {:.4?}  (direct SVD agrees to {err:.1e})", direct);
    }
    Ok(())
}
