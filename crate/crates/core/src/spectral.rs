//! Singular-value machinery for normalized joint matrices.
//!
//! For a valid joint, every singular value of `P̃` lies in `[0, 1]`, the
//! largest is exactly 1, and its singular pair is `(√p_X, √p_Y)`. The second
//! singular value `λ₂` is the maximal correlation of the pair: 0 exactly for
//! independent variables, 1 exactly when the joint decomposes into two blocks
//! with no cross mass.

use crate::error::{Error, Result};
use crate::matrix::{dot, norm2, Matrix};
use crate::probcore::{JointDistribution, MAX_ALPHABET, SUPPORT_TOL};

/// Off-diagonal tolerance for a Jacobi rotation, relative to the column norms.
pub const JACOBI_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 60;
/// Singular values at or below this count as zero when computing rank.
pub const RANK_TOL: f64 = 1e-10;
/// Singular values this close to the top one are treated as tied with it.
const TIE_TOL: f64 = 1e-9;
/// Tolerance used by [`verify_theorem1`].
pub const THEOREM1_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct SpectralProfile {
    /// Sorted descending; length `min(m, n)`.
    pub singular_values: Vec<f64>,
    /// `m × l`, orthonormal columns.
    pub left_vectors: Matrix,
    /// `n × l`, orthonormal columns.
    pub right_vectors: Matrix,
    pub rank_tol: f64,
}

impl SpectralProfile {
    pub fn len(&self) -> usize {
        self.singular_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.singular_values.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.singular_values.iter().filter(|&&s| s > self.rank_tol).count()
    }

    /// `i`-th largest singular value, 1-based as in `λ₁ ≥ λ₂ ≥ …`; zero past the end.
    pub fn lambda(&self, i: usize) -> f64 {
        assert!(i >= 1, "singular values are 1-indexed");
        self.singular_values.get(i - 1).copied().unwrap_or(0.0)
    }

    pub fn left(&self, k: usize) -> Vec<f64> {
        self.left_vectors.col(k)
    }

    pub fn right(&self, k: usize) -> Vec<f64> {
        self.right_vectors.col(k)
    }

    /// `U diag(λ) Vᵀ`.
    pub fn reconstruct(&self) -> Matrix {
        let (m, n) = (self.left_vectors.rows(), self.right_vectors.rows());
        let mut out = Matrix::zeros(m, n);
        for (k, &s) in self.singular_values.iter().enumerate() {
            for i in 0..m {
                let a = s * self.left_vectors[(i, k)];
                for j in 0..n {
                    out[(i, j)] += a * self.right_vectors[(j, k)];
                }
            }
        }
        out
    }
}

/// One-sided (Hestenes) Jacobi on the columns of a tall matrix.
/// Returns the column norms, the normalized rotated columns and the rotation.
fn hestenes(a: &Matrix) -> Result<(Vec<f64>, Matrix, Matrix)> {
    let (m, n) = a.shape();
    debug_assert!(m >= n);
    let mut w = a.clone();
    let mut v = Matrix::identity(n);
    let mut converged = n < 2;
    // columns at rounding level are treated as zero
    let negligible = 1e-30 * a.frobenius_norm().powi(2);
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, 0.0);
                for i in 0..m {
                    let (x, y) = (w[(i, p)], w[(i, q)]);
                    alpha += x * x;
                    beta += y * y;
                    gamma += x * y;
                }
                if gamma == 0.0
                    || alpha.min(beta) <= negligible
                    || gamma.abs() <= JACOBI_TOL * (alpha * beta).sqrt()
                {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..m {
                    let (x, y) = (w[(i, p)], w[(i, q)]);
                    w[(i, p)] = c * x - s * y;
                    w[(i, q)] = s * x + c * y;
                }
                for i in 0..n {
                    let (x, y) = (v[(i, p)], v[(i, q)]);
                    v[(i, p)] = c * x - s * y;
                    v[(i, q)] = s * x + c * y;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            what: "Jacobi SVD",
            iterations: MAX_SWEEPS,
        });
    }

    let sigma: Vec<f64> = (0..n).map(|j| norm2(&w.col(j))).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| sigma[y].total_cmp(&sigma[x]));
    let sigma_max = sigma.iter().copied().fold(0.0, f64::max);
    let floor = sigma_max * f64::EPSILON * (m.max(n) as f64);

    let mut left = Matrix::zeros(m, n);
    let mut right = Matrix::zeros(n, n);
    let mut missing = Vec::new();
    for (k, &j) in order.iter().enumerate() {
        for i in 0..n {
            right[(i, k)] = v[(i, j)];
        }
        if sigma[j] > floor && sigma[j] > 0.0 {
            for i in 0..m {
                left[(i, k)] = w[(i, j)] / sigma[j];
            }
        } else {
            missing.push(k);
        }
    }
    complete_orthonormal(&mut left, &missing);
    let values = order.iter().map(|&j| sigma[j]).collect();
    Ok((values, left, right))
}

/// Fills the listed columns with unit vectors orthogonal to every other column.
fn complete_orthonormal(q: &mut Matrix, missing: &[usize]) {
    let (m, n) = q.shape();
    let mut filled: Vec<usize> = (0..n).filter(|k| !missing.contains(k)).collect();
    for &k in missing {
        for e in 0..m {
            let mut cand = vec![0.0; m];
            cand[e] = 1.0;
            // two passes of modified Gram-Schmidt
            for _ in 0..2 {
                for &f in &filled {
                    let col = q.col(f);
                    let d = dot(&cand, &col);
                    for (c, x) in cand.iter_mut().zip(&col) {
                        *c -= d * x;
                    }
                }
            }
            let nrm = norm2(&cand);
            if nrm > 1e-3 {
                for i in 0..m {
                    q[(i, k)] = cand[i] / nrm;
                }
                filled.push(k);
                break;
            }
        }
    }
}

/// Flips singular pairs so the first clearly nonzero entry of each left vector is positive.
fn fix_signs(p: &mut SpectralProfile, from: usize) {
    for k in from..p.len() {
        let first = (0..p.left_vectors.rows())
            .map(|i| p.left_vectors[(i, k)])
            .find(|x| x.abs() > 1e-12);
        if matches!(first, Some(x) if x < 0.0) {
            for i in 0..p.left_vectors.rows() {
                p.left_vectors[(i, k)] = -p.left_vectors[(i, k)];
            }
            for i in 0..p.right_vectors.rows() {
                p.right_vectors[(i, k)] = -p.right_vectors[(i, k)];
            }
        }
    }
}

/// Thin SVD of a small dense matrix by one-sided Jacobi on the smaller Gram side.
///
/// Deterministic: cyclic sweep order, values sorted descending with ties kept in
/// column order, and each left vector's first nonzero component made positive.
pub fn svd_small(m: &Matrix) -> Result<SpectralProfile> {
    let (rows, cols) = m.shape();
    if rows > MAX_ALPHABET || cols > MAX_ALPHABET {
        return Err(Error::SizeCapExceeded { rows, cols, cap: MAX_ALPHABET });
    }
    if m.as_slice().iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    let mut profile = if rows >= cols {
        let (values, left, right) = hestenes(m)?;
        SpectralProfile {
            singular_values: values,
            left_vectors: left,
            right_vectors: right,
            rank_tol: RANK_TOL,
        }
    } else {
        let (values, left, right) = hestenes(&m.transpose())?;
        SpectralProfile {
            singular_values: values,
            left_vectors: right,
            right_vectors: left,
            rank_tol: RANK_TOL,
        }
    };
    fix_signs(&mut profile, 0);
    Ok(profile)
}

/// Spectral profile of `P̃` for a joint with strictly positive marginals.
///
/// When the top singular value is repeated (a decomposable joint), the tied
/// block is rotated so the first pair is the one closest to `(√p_X, √p_Y)`.
pub fn profile_of(joint: &JointDistribution) -> Result<SpectralProfile> {
    let tilde = joint.tilde()?;
    let mut p = svd_small(&tilde)?;
    if p.is_empty() {
        return Ok(p);
    }
    let (p_x, _) = joint.marginals();
    let sqrt_px: Vec<f64> = p_x.iter().map(|v| v.sqrt()).collect();
    let top = p.singular_values[0];
    let tied: Vec<usize> = (0..p.len()).filter(|&k| p.singular_values[k] >= top - TIE_TOL).collect();

    if tied.len() > 1 {
        let c = tied.len();
        let w: Vec<f64> = tied.iter().map(|&k| dot(&p.left(k), &sqrt_px)).collect();
        let wn = norm2(&w);
        if wn > 0.0 {
            // orthonormal basis of R^c whose first column is w / |w|
            let mut q = Matrix::zeros(c, c);
            for i in 0..c {
                q[(i, 0)] = w[i] / wn;
            }
            complete_orthonormal(&mut q, &(1..c).collect::<Vec<_>>());
            let rotate = |vecs: &mut Matrix| {
                let rows = vecs.rows();
                let block = Matrix::from_fn(rows, c, |i, a| vecs[(i, tied[a])]);
                let rotated = block.matmul(&q);
                for i in 0..rows {
                    for (a, &k) in tied.iter().enumerate() {
                        vecs[(i, k)] = rotated[(i, a)];
                    }
                }
            };
            rotate(&mut p.left_vectors);
            rotate(&mut p.right_vectors);
            fix_signs(&mut p, 1);
        }
    }
    if dot(&p.left(0), &sqrt_px) < 0.0 {
        for i in 0..p.left_vectors.rows() {
            p.left_vectors[(i, 0)] = -p.left_vectors[(i, 0)];
        }
        for i in 0..p.right_vectors.rows() {
            p.right_vectors[(i, 0)] = -p.right_vectors[(i, 0)];
        }
    }
    Ok(p)
}

/// Deviations of a joint's spectrum from the structure every valid joint must have.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem1Report {
    pub is_valid_joint: bool,
    /// `|λ₁ − 1|`
    pub lambda1_deviation: f64,
    /// `‖u₁ − √p_X‖₂`
    pub principal_left_deviation: f64,
    /// `‖v₁ − √p_Y‖₂`
    pub principal_right_deviation: f64,
    /// `max(λᵢ − 1, 0)` over all `i`
    pub max_excess: f64,
}

impl Theorem1Report {
    pub fn worst_deviation(&self) -> f64 {
        self.lambda1_deviation
            .max(self.principal_left_deviation)
            .max(self.principal_right_deviation)
            .max(self.max_excess)
    }
}

/// Checks the spectral characterization of a joint distribution matrix:
/// `λ₁ = 1` with singular pair `(√p_X, √p_Y)` and no singular value above 1.
///
/// Rows or columns with zero mass are removed first. The input is not
/// required to sum to one, so malformed matrices produce an invalid report
/// rather than an error.
pub fn verify_theorem1(joint: &JointDistribution) -> Result<Theorem1Report> {
    let joint = joint.strip_zero_mass_unnormalized();
    let p = profile_of(&joint)?;
    let (p_x, p_y) = joint.marginals();
    let dev = |v: Vec<f64>, p: &[f64]| {
        v.iter().zip(p).map(|(a, b)| (a - b.sqrt()).powi(2)).sum::<f64>().sqrt()
    };
    let lambda1 = p.lambda(1);
    let max_excess = p.singular_values.iter().map(|s| (s - 1.0).max(0.0)).fold(0.0, f64::max);
    let mut r = Theorem1Report {
        is_valid_joint: false,
        lambda1_deviation: (lambda1 - 1.0).abs(),
        principal_left_deviation: dev(p.left(0), &p_x),
        principal_right_deviation: dev(p.right(0), &p_y),
        max_excess,
    };
    r.is_valid_joint = r.worst_deviation() <= THEOREM1_TOL;
    Ok(r)
}

/// Second-largest singular value of `P̃`; zero when either alphabet has one symbol.
pub fn lambda2(joint: &JointDistribution) -> Result<f64> {
    let (m, n) = joint.shape();
    if m < 2 || n < 2 {
        joint.tilde()?;
        return Ok(0.0);
    }
    Ok(profile_of(joint)?.lambda(2))
}

/// [`lambda2`] after removing zero-mass symbols.
pub fn lambda2_stripped(joint: &JointDistribution) -> Result<f64> {
    lambda2(&joint.strip_zero_mass())
}

/// Singular values of `P̃` for `n` i.i.d. pairs, i.e. all `n`-fold products of
/// the single-letter singular values, sorted descending.
pub fn kron_power_spectrum(joint: &JointDistribution, n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidInput("Kronecker power needs n >= 1".into()));
    }
    let (m, k) = joint.shape();
    let too_big = |b: usize| (b as f64).powi(n as i32) > MAX_ALPHABET as f64;
    if too_big(m) || too_big(k) {
        return Err(Error::SizeCapExceeded {
            rows: m.saturating_pow(n as u32),
            cols: k.saturating_pow(n as u32),
            cap: MAX_ALPHABET,
        });
    }
    let base = profile_of(joint)?.singular_values;
    let mut out = base.clone();
    for _ in 1..n {
        out = out.iter().flat_map(|a| base.iter().map(move |b| a * b)).collect();
    }
    out.sort_by(|a, b| b.total_cmp(a));
    Ok(out)
}

/// Witness that a joint splits into `S₁ × S₂` and its complement with no cross mass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Row indices, sorted.
    pub s1: Vec<usize>,
    /// Column indices, sorted.
    pub s2: Vec<usize>,
}

impl Decomposition {
    /// Same split with both sides complemented.
    pub fn complement(&self, rows: usize, cols: usize) -> Decomposition {
        Decomposition {
            s1: (0..rows).filter(|i| !self.s1.contains(i)).collect(),
            s2: (0..cols).filter(|j| !self.s2.contains(j)).collect(),
        }
    }

    /// True when `other` describes the same split, possibly complemented.
    pub fn same_split(&self, other: &Decomposition, rows: usize, cols: usize) -> bool {
        self == other || *self == other.complement(rows, cols)
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = x;
    while parent[c] != r {
        let next = parent[c];
        parent[c] = r;
        c = next;
    }
    r
}

/// Looks for a decomposition using connected components of the bipartite
/// support graph (rows and columns joined by entries above [`SUPPORT_TOL`]).
/// Returns the component containing row 0 when there is more than one.
pub fn detect_decomposition(joint: &JointDistribution) -> Option<Decomposition> {
    let (m, n) = joint.shape();
    let mut parent: Vec<usize> = (0..m + n).collect();
    let mat = joint.matrix();
    for i in 0..m {
        for j in 0..n {
            if mat[(i, j)] > SUPPORT_TOL {
                let (a, b) = (find(&mut parent, i), find(&mut parent, m + j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let root = find(&mut parent, 0);
    let roots: Vec<usize> = (0..m + n).map(|x| find(&mut parent, x)).collect();
    let s1: Vec<usize> = (0..m).filter(|&i| roots[i] == root).collect();
    let s2: Vec<usize> = (0..n).filter(|&j| roots[m + j] == root).collect();
    if s1.len() == m && s2.len() == n {
        return None;
    }
    if s1.is_empty() || s2.is_empty() || s1.len() == m || s2.len() == n {
        // a zero-mass row or column; not a valid witness
        return None;
    }
    Some(Decomposition { s1, s2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Closed-form singular values of a 2×2 matrix.
    fn svd2_oracle(m: &Matrix) -> (f64, f64) {
        let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
        let s1 = a * a + b * b + c * c + d * d;
        let det = (a * d - b * c).abs();
        let root = (s1 * s1 - 4.0 * det * det).max(0.0).sqrt();
        (((s1 + root) / 2.0).sqrt(), ((s1 - root) / 2.0).max(0.0).sqrt())
    }

    fn joint(rows: &[[f64; 2]]) -> JointDistribution {
        JointDistribution::from_rows(rows).unwrap()
    }

    #[test]
    fn svd_examples() {
        let p = svd_small(&Matrix::identity(2)).unwrap();
        assert_eq!(p.singular_values, vec![1.0, 1.0]);

        let p = svd_small(&Matrix::from_rows(&[[2.0 / 3.0, 1.0 / 3.0], [1.0 / 3.0, 2.0 / 3.0]])).unwrap();
        assert!((p.lambda(1) - 1.0).abs() < 1e-15 && (p.lambda(2) - 1.0 / 3.0).abs() < 1e-15);

        let p = svd_small(&Matrix::from_rows(&[[0.0, 1.0 / 3.0], [1.0 / 3.0, 8.0 / 9.0]])).unwrap();
        assert!((p.lambda(1) - 1.0).abs() < 1e-15 && (p.lambda(2) - 1.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn svd_rectangular_and_rank_deficient() {
        let m = Matrix::from_rows(&[[1.0, 2.0, 3.0], [2.0, 4.0, 6.0]]);
        for a in [m.clone(), m.transpose()] {
            let p = svd_small(&a).unwrap();
            assert_eq!(p.len(), 2);
            assert_eq!(p.rank(), 1);
            assert!(p.reconstruct().max_abs_diff(&a) < 1e-12);
            let g = p.left_vectors.transpose().matmul(&p.left_vectors);
            assert!(g.max_abs_diff(&Matrix::identity(2)) < 1e-12);
            let g = p.right_vectors.transpose().matmul(&p.right_vectors);
            assert!(g.max_abs_diff(&Matrix::identity(2)) < 1e-12);
        }
        let z = svd_small(&Matrix::zeros(3, 2)).unwrap();
        assert_eq!(z.singular_values, vec![0.0, 0.0]);
        let g = z.left_vectors.transpose().matmul(&z.left_vectors);
        assert!(g.max_abs_diff(&Matrix::identity(2)) < 1e-12);
    }

    #[test]
    fn svd_sign_convention() {
        let p = svd_small(&Matrix::from_rows(&[[-1.0, 0.0], [0.0, 2.0]])).unwrap();
        for k in 0..2 {
            let first = p.left(k).into_iter().find(|x| x.abs() > 1e-12).unwrap();
            assert!(first > 0.0);
        }
        assert!(p.reconstruct().max_abs_diff(&Matrix::from_rows(&[[-1.0, 0.0], [0.0, 2.0]])) < 1e-15);
    }

    #[test]
    fn svd_rejects_non_finite() {
        assert!(svd_small(&Matrix::from_rows(&[[f64::NAN]])).is_err());
    }

    #[test]
    fn profile_examples() {
        let p = profile_of(&joint(&[[1.0 / 3.0, 1.0 / 6.0], [1.0 / 6.0, 1.0 / 3.0]])).unwrap();
        assert!((p.lambda(2) - 1.0 / 3.0).abs() < 1e-14);
        let p = profile_of(&joint(&[[0.0, 0.1], [0.1, 0.8]])).unwrap();
        assert!((p.lambda(2) - 1.0 / 9.0).abs() < 1e-14);
        let indep = JointDistribution::product(&[0.2, 0.5, 0.3], &[0.6, 0.4]).unwrap();
        assert!(lambda2(&indep).unwrap() < 1e-14);
    }

    #[test]
    fn profile_puts_principal_pair_first_under_ties() {
        let j = JointDistribution::from_rows(&[[0.2, 0.1, 0.0], [0.0, 0.0, 0.7]]).unwrap();
        let p = profile_of(&j).unwrap();
        assert!((p.lambda(2) - 1.0).abs() < 1e-12);
        let r = verify_theorem1(&j).unwrap();
        assert!(r.is_valid_joint, "{r:?}");
        assert!(p.reconstruct().max_abs_diff(&j.tilde().unwrap()) < 1e-9);
    }

    #[test]
    fn theorem1_examples() {
        let bad = JointDistribution::new_unchecked(Matrix::from_rows(&[[0.9, 0.0], [0.0, 0.9]]));
        let r = verify_theorem1(&bad).unwrap();
        assert!(!r.is_valid_joint);
        assert!(r.principal_left_deviation > 0.1);

        let uniform = joint(&[[0.25, 0.25], [0.25, 0.25]]);
        let r = verify_theorem1(&uniform).unwrap();
        assert!(r.is_valid_joint);
        let p = profile_of(&uniform).unwrap();
        assert!((p.lambda(1) - 1.0).abs() < 1e-15 && p.lambda(2).abs() < 1e-15);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((p.left(0)[0] - h).abs() < 1e-15 && (p.left(0)[1] - h).abs() < 1e-15);
    }

    #[test]
    fn lambda2_examples() {
        assert!((lambda2(&joint(&[[0.5, 0.0], [0.0, 0.5]])).unwrap() - 1.0).abs() < 1e-15);
        let skewed = joint(&[[0.0, 0.85], [0.1, 0.05]]);
        let l2 = lambda2(&skewed).unwrap();
        assert!(l2 > 0.0 && l2 < 1.0);
        let (_, oracle) = svd2_oracle(&skewed.tilde().unwrap());
        assert!((l2 - oracle).abs() < 1e-12);
        let row = JointDistribution::from_rows(&[[0.4, 0.6]]).unwrap();
        assert_eq!(lambda2(&row).unwrap(), 0.0);
    }

    #[test]
    fn kron_spectrum_examples() {
        let j = joint(&[[1.0 / 3.0, 1.0 / 6.0], [1.0 / 6.0, 1.0 / 3.0]]);
        let s = kron_power_spectrum(&j, 2).unwrap();
        for (a, b) in s.iter().zip([1.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 9.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        let s1 = kron_power_spectrum(&j, 1).unwrap();
        assert_eq!(s1, profile_of(&j).unwrap().singular_values);
        let indep = JointDistribution::product(&[0.3, 0.7], &[0.5, 0.5]).unwrap();
        let s = kron_power_spectrum(&indep, 3).unwrap();
        assert!((s[0] - 1.0).abs() < 1e-12 && s[1..].iter().all(|v| v.abs() < 1e-12));
        assert!(matches!(kron_power_spectrum(&j, 13), Err(Error::SizeCapExceeded { .. })));
    }

    #[test]
    fn decomposition_examples() {
        let d = detect_decomposition(&joint(&[[0.5, 0.0], [0.0, 0.5]])).unwrap();
        assert_eq!(d, Decomposition { s1: vec![0], s2: vec![0] });
        assert!(detect_decomposition(&joint(&[[1.0 / 3.0, 1.0 / 6.0], [1.0 / 6.0, 1.0 / 3.0]])).is_none());
        assert!(detect_decomposition(&joint(&[[0.0, 0.1], [0.1, 0.8]])).is_none());
    }

    #[test]
    fn decomposition_of_block_diagonal_has_unit_lambda2() {
        // 0.3 * A (2x3) and 0.7 * B (2x1), interleaved
        let m = Matrix::from_rows(&[
            [0.05, 0.0, 0.1, 0.0],
            [0.0, 0.7, 0.0, 0.0],
            [0.1, 0.0, 0.05, 0.0],
        ]);
        let m = Matrix::from_fn(3, 4, |i, j| if j == 3 { 0.0 } else { m[(i, j)] });
        let j = JointDistribution::from_matrix(m).unwrap().strip_zero_mass();
        let d = detect_decomposition(&j).unwrap();
        assert_eq!(d, Decomposition { s1: vec![0, 2], s2: vec![0, 2] });
        assert!((lambda2(&j).unwrap() - 1.0).abs() < 1e-12);
    }
}
