//! Marginals, conditionals, entropies and Kronecker powers of a labeled joint.

use sumrate::{Alphabet, Axis, JointDistribution, Matrix};

fn main() -> sumrate::Result<()> {
    let weather = Alphabet::new(["sun", "rain"])?;
    let umbrella = Alphabet::new(["none", "carried"])?;
    let p = JointDistribution::new(
        weather,
        umbrella,
        Matrix::from_rows(&[[0.56, 0.14], [0.03, 0.27]]),
    )?;

    let (p_x, p_y) = p.marginals();
    println!("p(weather)  = {p_x:.3?}");
    println!("p(umbrella) = {p_y:.3?}");

    let given_weather = p.conditional(Axis::Row)?;
    println!("p(umbrella | weather) =\n{:?}", given_weather.matrix());

    println!("H(W,U) = {:.4} bits", p.joint_entropy());
    println!("I(W;U) = {:.4} bits", p.mutual_information());

    // three independent days
    let days = p.kron_power(3)?;
    println!(
        "3 days: {} x {} joint, H = {:.4} = 3 x {:.4}, second row label {:?}",
        days.shape().0,
        days.shape().1,
        days.joint_entropy(),
        p.joint_entropy(),
        days.row_alphabet().symbol(1)
    );
    Ok(())
}
