//! Markov chains `X → Y → Z` and the spectral data-processing inequality
//! `λᵢ(P̃_XZ) ≤ λᵢ(P̃_XY) λ₂(P̃_YZ) ≤ λᵢ(P̃_XY)` for `i ≥ 2`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::probcore::{Alphabet, ConditionalKernel, JointDistribution, SUPPORT_TOL};
use crate::rng::{self, SeededRng};
use crate::spectral::{self, RANK_TOL};

/// Slack below which a DPI check counts as violated.
pub const SLACK_TOL: f64 = -1e-9;

/// A joint `P_XY` together with a channel `P_{Z|Y}`; `Z` sees `X` only through `Y`.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkovTriple {
    joint_xy: JointDistribution,
    kernel_z_given_y: ConditionalKernel,
}

impl MarkovTriple {
    pub fn new(joint_xy: JointDistribution, kernel_z_given_y: ConditionalKernel) -> Result<Self> {
        if kernel_z_given_y.from_alphabet() != joint_xy.col_alphabet() {
            return Err(Error::AlphabetMismatch(
                "kernel input alphabet differs from the joint's column alphabet".into(),
            ));
        }
        Ok(Self {
            joint_xy,
            kernel_z_given_y,
        })
    }

    pub fn joint_xy(&self) -> &JointDistribution {
        &self.joint_xy
    }

    pub fn kernel(&self) -> &ConditionalKernel {
        &self.kernel_z_given_y
    }

    /// `P_YZ` with entry `(j, k) = p_Y(j) P(z_k | y_j)`.
    pub fn joint_yz(&self) -> Result<JointDistribution> {
        let (_, p_y) = self.joint_xy.marginals();
        self.kernel_z_given_y.joint_with_input(&p_y)
    }

    /// Removes zero-mass symbols of `X`, `Y` and `Z` so every normalized matrix exists.
    pub fn stripped(&self) -> Result<MarkovTriple> {
        let (p_x, p_y) = self.joint_xy.marginals();
        let k = self.kernel_z_given_y.matrix();
        let p_z = k.mul_vec(&p_y);
        let xs: Vec<usize> = (0..p_x.len()).filter(|&i| p_x[i] > SUPPORT_TOL).collect();
        let ys: Vec<usize> = (0..p_y.len()).filter(|&j| p_y[j] > SUPPORT_TOL).collect();
        let zs: Vec<usize> = (0..p_z.len()).filter(|&l| p_z[l] > SUPPORT_TOL).collect();
        if xs.len() == p_x.len() && ys.len() == p_y.len() && zs.len() == p_z.len() {
            return Ok(self.clone());
        }
        let pick = |a: &Alphabet, idx: &[usize]| {
            Alphabet::new(idx.iter().map(|&i| a.symbol(i).to_string())).expect("subset of a valid alphabet")
        };
        let jm = self.joint_xy.matrix().select(&xs, &ys);
        let total = jm.sum();
        let joint = JointDistribution::new(
            pick(self.joint_xy.row_alphabet(), &xs),
            pick(self.joint_xy.col_alphabet(), &ys),
            jm.scale(1.0 / total),
        )?;
        let km = k.select(&zs, &ys);
        // renormalize each column against rounding in the dropped rows
        let sums = km.col_sums();
        let km = Matrix::from_fn(km.rows(), km.cols(), |a, b| km[(a, b)] / sums[b]);
        let kernel = ConditionalKernel::new(
            joint.col_alphabet().clone(),
            pick(self.kernel_z_given_y.to_alphabet(), &zs),
            km,
        )?;
        MarkovTriple::new(joint, kernel)
    }
}

/// Joint of the chain's endpoints: `P_XZ(i, k) = Σ_j P_XY(i, j) P(z_k | y_j)`.
pub fn compose(t: &MarkovTriple) -> Result<JointDistribution> {
    let m = t.joint_xy.matrix().matmul(&t.kernel_z_given_y.matrix().transpose());
    JointDistribution::new(
        t.joint_xy.row_alphabet().clone(),
        t.kernel_z_given_y.to_alphabet().clone(),
        m,
    )
}

/// Largest elementwise gap between `P̃_XZ` and `P̃_XY P̃_YZ` (after stripping zero-mass symbols).
pub fn product_identity_error(t: &MarkovTriple) -> Result<f64> {
    let t = t.stripped()?;
    let lhs = compose(&t)?.tilde()?;
    let rhs = t.joint_xy.tilde()?.matmul(&t.joint_yz()?.tilde()?);
    Ok(lhs.max_abs_diff(&rhs))
}

/// Per-index slacks of the data-processing inequality for `i = 2..=r`, where `r`
/// counts singular values of `P̃_XZ` above `10 · RANK_TOL`.
#[derive(Debug, Clone, PartialEq)]
pub struct DpiCheck {
    /// `λᵢ(P̃_XY) λ₂(P̃_YZ) − λᵢ(P̃_XZ)`
    pub slack: Vec<f64>,
    /// `λᵢ(P̃_XY) − λᵢ(P̃_XZ)`
    pub outer_slack: Vec<f64>,
    pub lambda2_yz: f64,
}

impl DpiCheck {
    /// Smallest slack, or `+∞` when `P̃_XZ` has rank one and the inequality is vacuous.
    pub fn min_slack(&self) -> f64 {
        self.slack.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn min_outer_slack(&self) -> f64 {
        self.outer_slack.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn holds(&self) -> bool {
        self.min_slack() >= SLACK_TOL && self.min_outer_slack() >= SLACK_TOL
    }
}

pub fn check_dpi(t: &MarkovTriple) -> Result<DpiCheck> {
    let t = t.stripped()?;
    let xy = spectral::profile_of(&t.joint_xy)?;
    let xz = spectral::profile_of(&compose(&t)?)?;
    let lambda2_yz = spectral::lambda2(&t.joint_yz()?)?;
    let rank = xz.singular_values.iter().filter(|&&s| s > 10.0 * RANK_TOL).count();
    let (mut slack, mut outer_slack) = (Vec::new(), Vec::new());
    for i in 2..=rank {
        slack.push(xy.lambda(i) * lambda2_yz - xz.lambda(i));
        outer_slack.push(xy.lambda(i) - xz.lambda(i));
    }
    Ok(DpiCheck {
        slack,
        outer_slack,
        lambda2_yz,
    })
}

fn exp_matrix(rng: &mut SeededRng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rng::exponential(rng))
}

/// With probability 0.1 zeroes one entry; rows and columns keep positive mass.
fn maybe_sparsify(rng: &mut SeededRng, m: &mut Matrix) {
    if rng.gen_bool(0.1) && m.rows() >= 2 && m.cols() >= 2 {
        let i = rng.gen_range(0..m.rows());
        let j = rng.gen_range(0..m.cols());
        m[(i, j)] = 0.0;
    }
}

/// Random joint with all-positive marginals, deterministic in `seed`.
pub fn random_joint(seed: u64, m: usize, n: usize) -> JointDistribution {
    assert!(m >= 1 && n >= 1, "dimensions must be positive");
    let mut rng = rng::seeded(seed);
    let mut mat = exp_matrix(&mut rng, m, n);
    maybe_sparsify(&mut rng, &mut mat);
    let total = mat.sum();
    JointDistribution::from_matrix(mat.scale(1.0 / total)).expect("normalized positive matrix")
}

/// Random `m × n` column-stochastic kernel (`n` inputs, `m` outputs), deterministic in `seed`.
pub fn random_kernel(seed: u64, m: usize, n: usize) -> ConditionalKernel {
    assert!(m >= 1 && n >= 1, "dimensions must be positive");
    let mut rng = rng::seeded(seed);
    let mut mat = exp_matrix(&mut rng, m, n);
    maybe_sparsify(&mut rng, &mut mat);
    let sums = mat.col_sums();
    let mat = Matrix::from_fn(m, n, |i, j| mat[(i, j)] / sums[j]);
    ConditionalKernel::from_matrix(mat).expect("normalized columns")
}

/// Random joint that decomposes: a block-diagonal matrix with random block
/// sizes and weights, rows and columns shuffled. Needs `m, n ≥ 2`.
pub fn random_decomposable_joint(seed: u64, m: usize, n: usize) -> JointDistribution {
    assert!(m >= 2 && n >= 2, "a decomposable joint needs two symbols per axis");
    let mut rng = rng::seeded(seed);
    let rows_a = rng.gen_range(1..m);
    let cols_a = rng.gen_range(1..n);
    let w = rng.gen_range(0.05..0.95);
    let mut mat = Matrix::zeros(m, n);
    for i in 0..m {
        for j in 0..n {
            let in_a = (i < rows_a, j < cols_a);
            if in_a.0 == in_a.1 {
                mat[(i, j)] = rng::exponential(&mut rng);
            }
        }
    }
    let block_mass = |mat: &Matrix, a: bool| {
        let mut s = 0.0;
        for i in 0..m {
            for j in 0..n {
                if (i < rows_a) == a && (j < cols_a) == a {
                    s += mat[(i, j)];
                }
            }
        }
        s
    };
    let (ma, mb) = (block_mass(&mat, true), block_mass(&mat, false));
    let pr = rng::permutation(&mut rng, m);
    let pc = rng::permutation(&mut rng, n);
    let out = Matrix::from_fn(m, n, |i, j| {
        let (si, sj) = (pr[i], pc[j]);
        let v = mat[(si, sj)];
        if si < rows_a { v * w / ma } else { v * (1.0 - w) / mb }
    });
    let total = out.sum();
    JointDistribution::from_matrix(out.scale(1.0 / total)).expect("normalized block matrix")
}

/// Seeded Markov triple with alphabets of size 2 to 5. About one in five
/// triples uses a degenerate kernel (identity, constant, or permutation).
pub fn random_triple(seed: u64) -> MarkovTriple {
    let mut rng = rng::seeded(seed ^ 0x9e37_79b9_7f4a_7c15);
    let (nx, ny) = (rng.gen_range(2..=5), rng.gen_range(2..=5));
    let joint = random_joint(rng.gen(), nx, ny);
    let kernel = match rng.gen_range(0..20) {
        0 => ConditionalKernel::identity(joint.col_alphabet()),
        1 => {
            let nz = rng.gen_range(1..=5);
            let q = rng::uniform_simplex(&mut rng, nz);
            ConditionalKernel::constant(joint.col_alphabet(), &q).expect("stochastic column")
        }
        2 => {
            let p = rng::permutation(&mut rng, ny);
            let m = Matrix::from_fn(ny, ny, |i, j| if p[j] == i { 1.0 } else { 0.0 });
            ConditionalKernel::from_matrix(m).expect("permutation matrix")
        }
        _ => random_kernel(rng.gen(), rng.gen_range(2..=5), ny),
    };
    let kernel = ConditionalKernel::new(joint.col_alphabet().clone(), kernel.to_alphabet().clone(), kernel.matrix().clone())
        .expect("kernel over the joint's column alphabet");
    MarkovTriple::new(joint, kernel).expect("matching alphabets")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symmetric() -> JointDistribution {
        JointDistribution::from_rows(&[[1.0 / 3.0, 1.0 / 6.0], [1.0 / 6.0, 1.0 / 3.0]]).unwrap()
    }

    #[test]
    fn compose_with_identity_is_unchanged() {
        let j = random_joint(4, 3, 4);
        let t = MarkovTriple::new(j.clone(), ConditionalKernel::identity(j.col_alphabet())).unwrap();
        assert!(compose(&t).unwrap().matrix().max_abs_diff(j.matrix()) < 1e-15);
    }

    #[test]
    fn compose_with_constant_kernel_is_independent() {
        let j = random_joint(5, 3, 2);
        let q = [0.2, 0.5, 0.3];
        let t = MarkovTriple::new(j.clone(), ConditionalKernel::constant(j.col_alphabet(), &q).unwrap()).unwrap();
        let (px, _) = j.marginals();
        assert!(compose(&t).unwrap().matrix().max_abs_diff(&Matrix::outer(&px, &q)) < 1e-15);
        let c = check_dpi(&t).unwrap();
        assert!(c.slack.is_empty());
        assert!(c.holds());
    }

    #[test]
    fn compose_matches_direct_summation_and_tilde_product() {
        let j = symmetric();
        let k = ConditionalKernel::from_matrix(Matrix::from_rows(&[[0.9, 0.2], [0.1, 0.8]])).unwrap();
        let t = MarkovTriple::new(j.clone(), k).unwrap();
        let xz = compose(&t).unwrap();
        // direct: J_XZ(i,k) = sum_j J(i,j) K(k|j)
        let kk = [[0.9, 0.2], [0.1, 0.8]];
        for i in 0..2 {
            for (z, row) in kk.iter().enumerate() {
                let want: f64 = (0..2).map(|y| j.matrix()[(i, y)] * row[y]).sum();
                assert!((xz.matrix()[(i, z)] - want).abs() < 1e-15);
            }
        }
        assert!(product_identity_error(&t).unwrap() < 1e-10);
    }

    #[test]
    fn identity_kernel_is_tight_in_the_middle() {
        let j = random_joint(11, 3, 3);
        let t = MarkovTriple::new(j.clone(), ConditionalKernel::identity(j.col_alphabet())).unwrap();
        let c = check_dpi(&t).unwrap();
        assert!((c.lambda2_yz - 1.0).abs() < 1e-12);
        assert!(c.slack.iter().all(|s| s.abs() < 1e-12));
        assert!(c.outer_slack.iter().all(|s| s.abs() < 1e-12));
    }

    #[test]
    fn alphabet_mismatch_is_rejected() {
        let j = random_joint(1, 2, 3);
        let k = random_kernel(2, 2, 2);
        assert!(matches!(MarkovTriple::new(j, k), Err(Error::AlphabetMismatch(_))));
    }

    #[test]
    fn generators_are_deterministic_and_valid() {
        assert_eq!(random_joint(9, 3, 4), random_joint(9, 3, 4));
        assert_eq!(random_kernel(9, 3, 4), random_kernel(9, 3, 4));
        let j = random_joint(0, 2, 2);
        assert!((j.matrix().sum() - 1.0).abs() < 1e-12);
        assert!(j.matrix().min_entry() >= 0.0);
        assert!(!j.has_zero_mass());
    }

    #[test]
    fn some_generated_joints_are_sparse() {
        let sparse = (0..200).filter(|&s| random_joint(s, 3, 3).matrix().min_entry() == 0.0).count();
        assert!(sparse > 5 && sparse < 60, "{sparse}");
    }

    #[test]
    fn decomposable_generator_decomposes() {
        for s in 0..50 {
            let j = random_decomposable_joint(s, 4, 3);
            assert!(spectral::detect_decomposition(&j).is_some());
            assert!((spectral::lambda2(&j).unwrap() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn stripped_triple_drops_unreachable_outputs() {
        let j = random_joint(3, 2, 2);
        let k = ConditionalKernel::from_matrix(Matrix::from_rows(&[[0.5, 0.2], [0.0, 0.0], [0.5, 0.8]])).unwrap();
        let t = MarkovTriple::new(j, k).unwrap();
        let s = t.stripped().unwrap();
        assert_eq!(s.kernel().to_alphabet().symbols(), &["0".to_string(), "2".to_string()]);
        assert!(check_dpi(&t).unwrap().holds());
    }
}
