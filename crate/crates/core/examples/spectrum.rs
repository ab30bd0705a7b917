//! Singular values of the normalized joint matrix and the checks every valid joint passes.

use sumrate::{catalog, profile_of, spectral, JointDistribution, Matrix};

fn main() -> sumrate::Result<()> {
    for (name, src) in catalog::sources() {
        let prof = profile_of(&src)?;
        println!("{name:>9}: lambda = {:.4?}", prof.singular_values);
    }

    let src = catalog::symmetric_source();
    let prof = profile_of(&src)?;
    println!("u1 = {:.4?} (sqrt p_U)", prof.left(0));
    println!("v1 = {:.4?} (sqrt p_V)", prof.right(0));

    let report = spectral::verify_theorem1(&src)?;
    println!("valid joint: {}, worst deviation {:.1e}", report.is_valid_joint, report.worst_deviation());

    // a diagonal matrix with total mass 1.8 is not a joint; the spectrum says so
    let bogus = JointDistribution::new_unchecked(Matrix::from_rows(&[[0.9, 0.0], [0.0, 0.9]]));
    let report = spectral::verify_theorem1(&bogus)?;
    println!(
        "mass 1.8 diagonal: valid = {}, principal vector off by {:.3}",
        report.is_valid_joint, report.principal_left_deviation
    );
    Ok(())
}
