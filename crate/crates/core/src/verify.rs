//! Seeded property suites for the spectral facts the bounds rely on.
//!
//! Each suite is replayable: case `k` of a suite always uses seed `k`.

use std::fmt;

use crate::asymptotic::{self, Theorem3Row};
use crate::dpi;
use crate::error::Result;
use crate::probcore::JointDistribution;
use crate::spectral::{self, THEOREM1_TOL};

/// Elementwise tolerance for the tilde product identity along a Markov chain.
pub const PRODUCT_IDENTITY_TOL: f64 = 1e-10;
/// Tolerance for comparing Kronecker-power spectra.
pub const KRON_SPECTRUM_TOL: f64 = 1e-8;
/// `|λ₂ − 1|` below this counts as a decomposable joint.
pub const DECOMPOSITION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteSummary {
    pub name: &'static str,
    pub total: usize,
    pub passed: usize,
    /// The suite's headline statistic; see `metric`.
    pub worst: f64,
    pub metric: &'static str,
    pub threshold: &'static str,
    pub failed_seeds: Vec<u64>,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}/{} passed, {} {} (observed {:.3e})",
            self.name, self.passed, self.total, self.metric, self.threshold, self.worst
        )?;
        if !self.failed_seeds.is_empty() {
            let shown: Vec<String> = self.failed_seeds.iter().take(10).map(u64::to_string).collect();
            write!(f, "; failing seeds: {}", shown.join(", "))?;
        }
        Ok(())
    }
}

/// Joint shape for case `seed`, cycling through 2×2 … 6×6.
fn shape_for(seed: u64) -> (usize, usize) {
    (2 + (seed % 5) as usize, 2 + ((seed / 5) % 5) as usize)
}

/// Random joints satisfy `λ₁ = 1` with pair `(√p_X, √p_Y)` and all `λᵢ ∈ [0, 1]`.
pub fn theorem1_suite(cases: u64) -> Result<SuiteSummary> {
    let mut s = SuiteSummary {
        name: "theorem1",
        total: cases as usize,
        passed: 0,
        worst: 0.0,
        metric: "max deviation",
        threshold: "≤ 1e-8",
        failed_seeds: Vec::new(),
    };
    for seed in 0..cases {
        let (m, n) = shape_for(seed);
        let j = dpi::random_joint(seed, m, n);
        let r = spectral::verify_theorem1(&j)?;
        let min_value = spectral::profile_of(&j)?.singular_values.iter().copied().fold(f64::INFINITY, f64::min);
        let dev = r.worst_deviation().max(-min_value);
        s.worst = s.worst.max(dev);
        if r.is_valid_joint && min_value >= -THEOREM1_TOL {
            s.passed += 1;
        } else {
            s.failed_seeds.push(seed);
        }
    }
    Ok(s)
}

/// Result of [`dpi_suite`], with the product-identity error tracked separately.
#[derive(Debug, Clone, PartialEq)]
pub struct DpiSuite {
    pub summary: SuiteSummary,
    pub max_identity_error: f64,
    pub min_outer_slack: f64,
}

/// Random Markov triples satisfy the spectral DPI, the tilde product identity
/// and the classical DPI for mutual information.
pub fn dpi_suite(cases: u64) -> Result<DpiSuite> {
    let mut s = SuiteSummary {
        name: "dpi",
        total: cases as usize,
        passed: 0,
        worst: f64::INFINITY,
        metric: "min slack",
        threshold: "≥ −1e-9",
        failed_seeds: Vec::new(),
    };
    let mut max_identity_error: f64 = 0.0;
    let mut min_outer = f64::INFINITY;
    for seed in 0..cases {
        let t = dpi::random_triple(seed);
        let check = dpi::check_dpi(&t)?;
        let identity = dpi::product_identity_error(&t)?;
        let mi_xy = t.joint_xy().mutual_information();
        let mi_xz = dpi::compose(&t)?.mutual_information();
        s.worst = s.worst.min(check.min_slack());
        min_outer = min_outer.min(check.min_outer_slack());
        max_identity_error = max_identity_error.max(identity);
        if check.holds() && identity <= PRODUCT_IDENTITY_TOL && mi_xz <= mi_xy + 1e-9 {
            s.passed += 1;
        } else {
            s.failed_seeds.push(seed);
        }
    }
    if s.worst == f64::INFINITY {
        s.worst = 0.0;
    }
    Ok(DpiSuite {
        summary: s,
        max_identity_error,
        min_outer_slack: min_outer,
    })
}

/// Spectrum of `P̃` for `n` i.i.d. pairs, computed by SVD of the full
/// Kronecker power, against the products of single-letter singular values.
/// Also checks that `λ₂` appears at least `n` times right after the leading 1.
pub fn iid_suite(cases: u64) -> Result<SuiteSummary> {
    let mut s = SuiteSummary {
        name: "iid",
        total: 0,
        passed: 0,
        worst: 0.0,
        metric: "max spectrum mismatch",
        threshold: "≤ 1e-8",
        failed_seeds: Vec::new(),
    };
    for seed in 0..cases {
        let (m, k) = (2 + (seed % 2) as usize, 2 + ((seed / 2) % 2) as usize);
        let j = dpi::random_joint(seed, m, k);
        let lambda2 = spectral::lambda2(&j)?;
        for n in 1..=3 {
            s.total += 1;
            let predicted = spectral::kron_power_spectrum(&j, n)?;
            let direct = spectral::svd_small(&j.kron_power(n)?.tilde()?)?.singular_values;
            let mismatch = predicted
                .iter()
                .zip(&direct)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            let multiplicity = direct.iter().skip(1).take(n).all(|v| (v - lambda2).abs() <= KRON_SPECTRUM_TOL);
            let lead = (direct[0] - 1.0).abs() <= KRON_SPECTRUM_TOL;
            s.worst = s.worst.max(mismatch);
            if predicted.len() == direct.len() && mismatch <= KRON_SPECTRUM_TOL && multiplicity && lead {
                s.passed += 1;
            } else {
                s.failed_seeds.push(seed);
            }
        }
    }
    Ok(s)
}

/// Joint for case `seed` of the decomposition suite: even seeds decompose by construction.
pub fn decomposition_case(seed: u64) -> JointDistribution {
    let (m, n) = shape_for(seed / 2);
    if seed.is_multiple_of(2) {
        dpi::random_decomposable_joint(seed, m, n)
    } else {
        dpi::random_joint(seed, m, n)
    }
}

/// A support-graph witness is found exactly when `|λ₂ − 1| ≤ 1e-8`.
pub fn decomposition_suite(cases: u64) -> Result<SuiteSummary> {
    let mut s = SuiteSummary {
        name: "decomposition",
        total: cases as usize,
        passed: 0,
        worst: 0.0,
        metric: "mismatches",
        threshold: "= 0",
        failed_seeds: Vec::new(),
    };
    for seed in 0..cases {
        let j = decomposition_case(seed);
        let witness = spectral::detect_decomposition(&j).is_some();
        let unit = (spectral::lambda2(&j)? - 1.0).abs() <= DECOMPOSITION_TOL;
        if witness == unit {
            s.passed += 1;
        } else {
            s.failed_seeds.push(seed);
        }
    }
    s.worst = (s.total - s.passed) as f64;
    Ok(s)
}

/// Per-row checks of the asymptotic construction.
#[derive(Debug, Clone)]
pub struct AppendixSuite {
    pub summary: SuiteSummary,
    pub rows: Vec<Theorem3Row>,
}

/// Runs the construction for `n = 1..=n_max`, checking for each `n` that the
/// gap is at most `p_maxⁿ`, that `P′` has `λ₂ = 1`, that `λ₂(P̃)` respects the
/// certificate's lower bound, and that the running maximum never decreases.
pub fn appendix_suite(p_x1: &[f64], p_u: &[f64], n_max: usize) -> Result<AppendixSuite> {
    let s1 = asymptotic::default_s1(p_x1);
    let rows = asymptotic::verify_theorem3(p_x1, &s1, p_u, n_max)?;
    let mut s = SuiteSummary {
        name: "appendix",
        total: rows.len(),
        passed: 0,
        worst: 0.0,
        metric: "1 − λ₂ at largest n",
        threshold: "→ 0",
        failed_seeds: Vec::new(),
    };
    let mut prev = f64::NEG_INFINITY;
    for r in &rows {
        let c = &r.certificate;
        let ok = c.gap <= c.p_max.powi(r.n as i32) + 1e-15
            && (c.lambda2_p_prime - 1.0).abs() <= 1e-8
            && r.lambda2 >= r.lower_bound - 1e-12
            && r.lambda2 <= 1.0 + 1e-8
            && r.running_max >= prev - 1e-9
            && c.error_norm <= c.c1 * c.p_max.powi(r.n as i32) + 1e-12
            && c.perturbation_gap <= c.scaled_error_norm + 1e-12;
        prev = r.running_max;
        if ok {
            s.passed += 1;
        } else {
            s.failed_seeds.push(r.n as u64);
        }
    }
    s.worst = rows.last().map_or(1.0, |r| 1.0 - r.running_max);
    Ok(AppendixSuite { summary: s, rows })
}
