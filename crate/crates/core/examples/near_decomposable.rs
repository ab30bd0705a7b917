//! Block-rescaling construction: a joint of n-letter encoder outputs whose lambda2
//! approaches 1 while a nearby joint decomposes exactly.

use sumrate::asymptotic;

fn main() -> sumrate::Result<()> {
    let p_x1 = [0.3, 0.7];
    let p_u = [0.6, 0.4];
    let s1 = asymptotic::default_s1(&p_x1);

    let c = asymptotic::construct_near_decomposable(&p_x1, &s1, &p_u, 4)?;
    println!("n = 4: |S1| = {}, |S2| = {}, mirrored = {}", c.s1.len(), c.s2.len(), c.mirrored);
    println!("||E|| = {:.3e}, lambda2(P') = {:.6}", c.certificate.error_norm, c.certificate.lambda2_p_prime);

    println!("{:>2} {:>10} {:>8} {:>8}", "n", "gap", "lower", "best");
    for row in asymptotic::verify_theorem3(&p_x1, &s1, &p_u, 8)? {
        println!(
            "{:>2} {:>10.3e} {:>8.4} {:>8.4}",
            row.n, row.certificate.gap, row.lower_bound, row.running_max
        );
    }
    Ok(())
}
