//! Passing Y through a kernel can only shrink every singular value of the normalized X–Z joint.

use sumrate::dpi::{self, MarkovTriple};
use sumrate::{lambda2, profile_of, ConditionalKernel, JointDistribution, Matrix};

fn main() -> sumrate::Result<()> {
    let xy = JointDistribution::from_rows(&[[0.30, 0.05, 0.0], [0.05, 0.25, 0.05], [0.0, 0.05, 0.25]])?;
    // a noisy relabeling of Y into a binary Z; columns are indexed by y
    let noise = ConditionalKernel::from_matrix(Matrix::from_rows(&[[0.9, 0.5, 0.2], [0.1, 0.5, 0.8]]))?;
    let chain = MarkovTriple::new(xy, noise)?;

    let xz = dpi::compose(&chain)?;
    println!("lambda(XY) = {:.4?}", profile_of(chain.joint_xy())?.singular_values);
    println!("lambda(YZ) = {:.4?}", profile_of(&chain.joint_yz()?)?.singular_values);
    println!("lambda(XZ) = {:.4?}", profile_of(&xz)?.singular_values);
    println!("lambda2(XZ) = {:.4} <= {:.4}", lambda2(&xz)?, lambda2(chain.joint_xy())?);

    let check = dpi::check_dpi(&chain)?;
    println!("min slack {:.3e}, holds: {}", check.min_slack(), check.holds());
    println!("product identity error {:.1e}", dpi::product_identity_error(&chain)?);

    let mut worst = f64::INFINITY;
    for seed in 0..500 {
        worst = worst.min(dpi::check_dpi(&dpi::random_triple(seed))?.min_slack());
    }
    println!("500 random chains: min slack {worst:.3e}");
    Ok(())
}
