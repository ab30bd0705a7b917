//! Near-decomposable encoder joints for i.i.d. source blocks.
//!
//! For a fixed marginal `p_X1` and a block `Uⁿ` of i.i.d. source letters, we
//! build a joint `P` of `(X1, Uⁿ)` with exactly those marginals whose `λ₂(P̃)`
//! approaches 1 as `n` grows. The recipe:
//!
//! 1. pick `S₁ ⊂ 𝒳₁` and a set `S₂ ⊂ 𝒰ⁿ` with `P(S₂)` as close to `P(S₁)` as
//!    possible ([`greedy_subset`]); the gap is at most `p_maxⁿ`;
//! 2. start from the independent joint `Pⁱ = p_X1 (p_Uⁿ)ᵀ` and rescale its four
//!    blocks so `S₁ × (𝒰ⁿ − S₂)` carries no mass while both marginals are kept;
//! 3. moving the remaining cross block onto `S₁ × S₂` gives `P′ = P + E`, which
//!    decomposes, so `λ₂(P̃′) = 1`. Perturbation and scaling bounds then give
//!
//!    `(1 − c₄ p_max^{n/2})(1 − c₂ p_max^{n/2}) ≤ λ₂(P̃) ≤ 1`.
//!
//! When the best `S₂` is lighter than `S₁`, both sets are replaced by their
//! complements, which flips the sign of the gap and leaves the split unchanged.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::probcore::{kron_power_vec, Alphabet, JointDistribution, MASS_TOL, MAX_ALPHABET, SUPPORT_TOL};
use crate::spectral::{self, svd_small};

/// Chooses `S₂` with `P(S₂)` close to `target`.
///
/// Atoms are visited in decreasing mass and added while the running total stays
/// at or below `target`; single-atom additions, removals and swaps are then
/// applied while they shrink the gap. The returned gap is at most the largest
/// atom of `p`. Indices are returned sorted.
pub fn greedy_subset(p: &[f64], target: f64) -> (Vec<usize>, f64) {
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by(|&a, &b| p[b].total_cmp(&p[a]));
    let mut inside = vec![false; p.len()];
    let mut cum = 0.0;
    for &i in &order {
        if cum + p[i] <= target {
            inside[i] = true;
            cum += p[i];
        }
    }

    loop {
        let gap = (cum - target).abs();
        let mut best: Option<(f64, Option<usize>, Option<usize>)> = None;
        let mut consider = |new_cum: f64, add: Option<usize>, remove: Option<usize>| {
            let g = (new_cum - target).abs();
            if g < gap - 1e-15 && best.is_none_or(|(bg, _, _)| g < bg) {
                best = Some((g, add, remove));
            }
        };
        for i in 0..p.len() {
            if inside[i] {
                consider(cum - p[i], None, Some(i));
            } else {
                consider(cum + p[i], Some(i), None);
            }
        }
        for i in (0..p.len()).filter(|&i| inside[i]) {
            for j in (0..p.len()).filter(|&j| !inside[j]) {
                consider(cum - p[i] + p[j], Some(j), Some(i));
            }
        }
        match best {
            Some((_, add, remove)) => {
                if let Some(j) = add {
                    inside[j] = true;
                    cum += p[j];
                }
                if let Some(i) = remove {
                    inside[i] = false;
                    cum -= p[i];
                }
            }
            None => break,
        }
    }

    let set: Vec<usize> = (0..p.len()).filter(|&i| inside[i]).collect();
    let mass: f64 = set.iter().map(|&i| p[i]).sum();
    (set, (mass - target).abs())
}

/// The singleton holding the largest atom of `p` (first one on ties).
pub fn default_s1(p: &[f64]) -> Vec<usize> {
    let mut best = 0;
    for (i, &v) in p.iter().enumerate() {
        if v > p[best] {
            best = i;
        }
    }
    vec![best]
}

/// Constants and measured quantities of one construction.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionCertificate {
    pub n: usize,
    /// Largest atom of the single-letter source law.
    pub p_max: f64,
    /// `|P(S₂) − P(S₁)|`
    pub gap: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
    /// `(1 − c₄ p_max^{n/2})₊ (1 − c₂ p_max^{n/2})₊`
    pub lower_bound: f64,
    /// Same with the `c₂` term at exponent `n`, `(1 − c₄ p_max^{n/2})₊ (1 − c₂ p_maxⁿ)₊`.
    pub lower_bound_strong: f64,
    pub lambda2_p: f64,
    pub lambda2_p_prime: f64,
    /// `‖P_X1^{-1/2} E P_Uⁿ^{-1/2}‖₂`
    pub error_norm: f64,
    /// Frobenius norm of the same matrix.
    pub error_frobenius: f64,
    /// `‖M^{-1/2} P_X1^{-1/2} E P_Uⁿ^{-1/2}‖₂`
    pub scaled_error_norm: f64,
    /// `maxᵢ |λᵢ(P̃′) − λᵢ(M^{-1/2} P̃)|`
    pub perturbation_gap: f64,
    /// `‖M^{1/2}‖₂`
    pub scale_norm: f64,
    /// `‖M^{-1/2}‖₂^{-1}`
    pub inverse_scale_norm_inv: f64,
}

impl ConstructionCertificate {
    /// `p_max^{n/2}`
    pub fn rate(&self) -> f64 {
        self.p_max.powf(self.n as f64 / 2.0)
    }
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub p: JointDistribution,
    pub p_prime: JointDistribution,
    /// `E = P′ − P`
    pub error: Matrix,
    /// Row set `S₁` as supplied by the caller.
    pub s1: Vec<usize>,
    /// Column set `S₂` chosen by [`greedy_subset`].
    pub s2: Vec<usize>,
    /// True when `P(S₂) < P(S₁)` and the complements were used.
    pub mirrored: bool,
    pub certificate: ConstructionCertificate,
}

fn check_probability_vector(p: &[f64], what: &str) -> Result<()> {
    if p.is_empty() || p.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(Error::InvalidInput(format!("{what} must be a non-empty nonnegative vector")));
    }
    let s: f64 = p.iter().sum();
    if (s - 1.0).abs() > MASS_TOL {
        return Err(Error::InvalidDistribution(format!("{what} sums to {s}")));
    }
    Ok(())
}

fn power_alphabet(base: usize, n: usize) -> Alphabet {
    let a = Alphabet::indexed(base);
    (1..n).fold(a.clone(), |acc, _| acc.product(&a))
}

fn two_norm(m: &Matrix) -> Result<f64> {
    Ok(svd_small(m)?.lambda(1))
}

/// Builds `P`, its decomposable neighbour `P′` and the certificate for block length `n`.
pub fn construct_near_decomposable(
    p_x1: &[f64],
    s1: &[usize],
    p_u: &[f64],
    n: usize,
) -> Result<Construction> {
    check_probability_vector(p_x1, "p_X1")?;
    check_probability_vector(p_u, "p_U")?;
    if n == 0 {
        return Err(Error::InvalidInput("block length must be at least 1".into()));
    }
    if p_x1.iter().any(|&v| v <= SUPPORT_TOL) {
        return Err(Error::InvalidInput("p_X1 must be strictly positive".into()));
    }
    if p_u.iter().any(|&v| v <= 0.0 || v >= 1.0) {
        return Err(Error::InvalidInput("every atom of p_U must lie in (0, 1)".into()));
    }
    if s1.iter().any(|&i| i >= p_x1.len()) {
        return Err(Error::InvalidInput("S1 index out of range".into()));
    }
    let cols = (p_u.len() as f64).powi(n as i32);
    if cols > MAX_ALPHABET as f64 {
        return Err(Error::SizeCapExceeded {
            rows: p_x1.len(),
            cols: p_u.len().saturating_pow(n as u32),
            cap: MAX_ALPHABET,
        });
    }
    let m = p_x1.len();
    let in_s1: Vec<bool> = (0..m).map(|i| s1.contains(&i)).collect();
    let ps1: f64 = (0..m).filter(|&i| in_s1[i]).map(|i| p_x1[i]).sum();
    if ps1 <= SUPPORT_TOL || ps1 >= 1.0 - SUPPORT_TOL {
        return Err(Error::InvalidInput(format!("P(S1) = {ps1} must lie in (0, 1)")));
    }

    let p_un = kron_power_vec(p_u, n);
    let big_n = p_un.len();
    let (s2, _) = greedy_subset(&p_un, ps1);
    let in_s2: Vec<bool> = (0..big_n).map(|j| s2.binary_search(&j).is_ok()).collect();
    let ps2: f64 = s2.iter().map(|&j| p_un[j]).sum();
    if ps2 <= SUPPORT_TOL || ps2 >= 1.0 - SUPPORT_TOL {
        return Err(Error::DegenerateSplit { mass: ps2 });
    }

    // orient so the column block is at least as heavy as the row block
    let mirrored = ps2 < ps1;
    let (row_a, col_b, pa, pb) = if mirrored {
        (
            in_s1.iter().map(|v| !v).collect::<Vec<_>>(),
            in_s2.iter().map(|v| !v).collect::<Vec<_>>(),
            1.0 - ps1,
            1.0 - ps2,
        )
    } else {
        (in_s1.clone(), in_s2.clone(), ps1, ps2)
    };

    let independent = Matrix::outer(p_x1, &p_un);
    let p = Matrix::from_fn(m, big_n, |i, j| {
        let v = independent[(i, j)];
        match (row_a[i], col_b[j]) {
            (true, true) => v / pb,
            (true, false) => 0.0,
            (false, true) => v * (pb - pa) / ((1.0 - pa) * pb),
            (false, false) => v / (1.0 - pa),
        }
    });
    let p_prime = Matrix::from_fn(m, big_n, |i, j| {
        let v = independent[(i, j)];
        match (row_a[i], col_b[j]) {
            (true, true) => v / pa,
            (false, false) => v / (1.0 - pa),
            _ => 0.0,
        }
    });
    let error = p_prime.sub(&p);

    let rows_alpha = Alphabet::indexed(m);
    let cols_alpha = power_alphabet(p_u.len(), n);
    let p_joint = JointDistribution::new(rows_alpha.clone(), cols_alpha.clone(), p)?;
    let p_prime_joint = JointDistribution::new(rows_alpha, cols_alpha, p_prime)?;

    let inv_sqrt = |v: &[f64]| v.iter().map(|x| 1.0 / x.sqrt()).collect::<Vec<_>>();
    let normalized_error = error.scale_rows_cols(&inv_sqrt(p_x1), &inv_sqrt(&p_un));
    // M scales the rows of the first block by pb/pa and the rest by (1-pb)/(1-pa)
    let m_inv_sqrt: Vec<f64> = (0..m)
        .map(|i| if row_a[i] { (pa / pb).sqrt() } else { ((1.0 - pa) / (1.0 - pb)).sqrt() })
        .collect();
    let ones = vec![1.0; big_n];
    let scaled_error = normalized_error.scale_rows_cols(&m_inv_sqrt, &ones);
    let tilde_p = p_joint.tilde()?;
    let scaled_tilde = tilde_p.scale_rows_cols(&m_inv_sqrt, &ones);

    let sv_prime = svd_small(&p_prime_joint.tilde()?)?.singular_values;
    let sv_scaled = svd_small(&scaled_tilde)?.singular_values;
    let perturbation_gap = sv_prime
        .iter()
        .zip(&sv_scaled)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);

    let p_max = p_u.iter().copied().fold(0.0, f64::max);
    let p1_prime = pa.min(1.0 - pa);
    let c1 = 1.0 / (p1_prime * pb);
    let c2 = ((1.0 - pa) / (1.0 - pb)).sqrt() * c1;
    let c3 = 1.0 / pa.sqrt();
    let c4 = 1.0 / (1.0 - pa).sqrt();
    let rate = p_max.powf(n as f64 / 2.0);
    let pos = |x: f64| x.max(0.0);
    let lower_bound = pos(1.0 - c4 * rate) * pos(1.0 - c2 * rate);
    let lower_bound_strong = pos(1.0 - c4 * rate) * pos(1.0 - c2 * p_max.powi(n as i32));

    let certificate = ConstructionCertificate {
        n,
        p_max,
        gap: (ps2 - ps1).abs(),
        c1,
        c2,
        c3,
        c4,
        lower_bound,
        lower_bound_strong,
        lambda2_p: spectral::lambda2(&p_joint)?,
        lambda2_p_prime: spectral::lambda2(&p_prime_joint)?,
        error_norm: two_norm(&normalized_error)?,
        error_frobenius: normalized_error.frobenius_norm(),
        scaled_error_norm: two_norm(&scaled_error)?,
        perturbation_gap,
        scale_norm: m_inv_sqrt.iter().map(|v| 1.0 / v).fold(0.0, f64::max),
        inverse_scale_norm_inv: m_inv_sqrt.iter().map(|v| 1.0 / v).fold(f64::INFINITY, f64::min),
    };

    Ok(Construction {
        p: p_joint,
        p_prime: p_prime_joint,
        error,
        s1: (0..m).filter(|&i| in_s1[i]).collect(),
        s2,
        mirrored,
        certificate,
    })
}

#[derive(Debug, Clone)]
pub struct Theorem3Row {
    pub n: usize,
    pub lower_bound: f64,
    pub lambda2: f64,
    /// Best `λ₂` seen for block lengths `1..=n`.
    pub running_max: f64,
    pub certificate: ConstructionCertificate,
}

/// Runs the construction for `n = 1..=n_max` and tracks the running maximum of `λ₂(P̃)`.
///
/// A source with a deterministic letter (`p_max = 1`) is rejected: no block
/// length can split it.
pub fn verify_theorem3(p_x1: &[f64], s1: &[usize], p_u: &[f64], n_max: usize) -> Result<Vec<Theorem3Row>> {
    let p_max = p_u.iter().copied().fold(0.0, f64::max);
    if p_max >= 1.0 {
        return Err(Error::InvalidInput("p_U is deterministic (p_max = 1)".into()));
    }
    let mut rows = Vec::with_capacity(n_max);
    let mut running = f64::NEG_INFINITY;
    for n in 1..=n_max {
        let c = construct_near_decomposable(p_x1, s1, p_u, n)?;
        running = running.max(c.certificate.lambda2_p);
        rows.push(Theorem3Row {
            n,
            lower_bound: c.certificate.lower_bound,
            lambda2: c.certificate.lambda2_p,
            running_max: running,
            certificate: c.certificate,
        });
    }
    Ok(rows)
}

/// Ratios `λᵢ(D A) / λᵢ(A)` for a positive diagonal `D`, with the bounds
/// `[‖D^{-1}‖₂^{-1}, ‖D‖₂]` they must respect.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingCheck {
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub lower: f64,
    pub upper: f64,
}

impl ScalingCheck {
    pub fn holds(&self, tol: f64) -> bool {
        self.min_ratio >= self.lower - tol && self.max_ratio <= self.upper + tol
    }
}

pub fn scaling_check(a: &Matrix, diag: &[f64]) -> Result<ScalingCheck> {
    if diag.len() != a.rows() || diag.iter().any(|&d| d <= 0.0) {
        return Err(Error::InvalidInput("scaling must be a positive diagonal matching the rows".into()));
    }
    let base = svd_small(a)?.singular_values;
    let scaled = svd_small(&a.scale_rows_cols(diag, &vec![1.0; a.cols()]))?.singular_values;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for (s, b) in scaled.iter().zip(&base) {
        if *b > 1e-12 {
            lo = lo.min(s / b);
            hi = hi.max(s / b);
        }
    }
    Ok(ScalingCheck {
        min_ratio: lo,
        max_ratio: hi,
        lower: diag.iter().copied().fold(f64::INFINITY, f64::min),
        upper: diag.iter().copied().fold(0.0, f64::max),
    })
}
