//! Sum-rate quantities for a source pair sent over a two-user MAC.
//!
//! Three numbers bracket what the channel can carry for a given source:
//!
//! - the trivial bound `max I(X₁, X₂; Y)` over every input law (Blahut–Arimoto);
//! - the single-letter achievable rate, the same mutual information but with
//!   inputs generated by separate encoders `p(x₁|u)` and `p(x₂|v)`;
//! - the correlation-constrained upper bound, where the input law may be any
//!   joint whose non-principal singular values of `P̃_{X₁X₂}` stay below
//!   `λ₂(P̃_UV)`.
//!
//! Comparing `H(U, V)` against them yields a [`Verdict`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::probcore::{self, ChannelModel, ConditionalKernel, JointDistribution};
use crate::rng;
use crate::spectral;

/// Slack on the singular-value constraint, absorbing SVD rounding.
pub const FEASIBILITY_TOL: f64 = 1e-9;

/// Grid candidates kept for local polishing.
const POLISH_TOP: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimizerConfig {
    pub seed: u64,
    pub restarts: usize,
    /// Step of the simplex grid used for binary inputs.
    pub grid_resolution: f64,
    pub convergence_tol: f64,
    pub max_iterations: usize,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            restarts: 32,
            grid_resolution: 0.0025,
            convergence_tol: 1e-9,
            max_iterations: 100_000,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::InvalidInput("restarts must be at least 1".into()));
        }
        if !(self.grid_resolution > 0.0 && self.grid_resolution <= 0.1) {
            return Err(Error::InvalidInput("grid resolution must lie in (0, 0.1]".into()));
        }
        if !(self.convergence_tol > 0.0 && self.convergence_tol <= 1e-3) {
            return Err(Error::InvalidInput("convergence tolerance must lie in (0, 1e-3]".into()));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidInput("max_iterations must be at least 1".into()));
        }
        Ok(())
    }
}

/// Mutual information `I((X₁,X₂); Y)` and its gradient over composite input laws.
#[derive(Debug, Clone)]
pub struct MacObjective {
    transition: Matrix,
    column_entropy: Vec<f64>,
}

impl MacObjective {
    pub fn new(ch: &ChannelModel) -> Self {
        let transition = ch.transition().clone();
        let column_entropy = (0..transition.cols()).map(|x| probcore::entropy(&transition.col(x))).collect();
        Self {
            transition,
            column_entropy,
        }
    }

    pub fn inputs(&self) -> usize {
        self.transition.cols()
    }

    pub fn value(&self, p: &[f64]) -> f64 {
        let q = self.transition.mul_vec(p);
        let cond: f64 = p.iter().zip(&self.column_entropy).map(|(a, h)| a * h).sum();
        (probcore::entropy(&q) - cond).max(0.0)
    }

    /// `D(x) = Σ_y W(y|x) log₂(W(y|x) / q(y))`; equals the partial derivative
    /// of the objective up to an additive constant.
    pub fn divergences(&self, p: &[f64]) -> Vec<f64> {
        let q = self.transition.mul_vec(p);
        (0..self.inputs())
            .map(|x| {
                (0..self.transition.rows())
                    .map(|y| {
                        let w = self.transition[(y, x)];
                        if w > 0.0 {
                            w * (w / q[y].max(1e-300)).log2()
                        } else {
                            0.0
                        }
                    })
                    .sum()
            })
            .collect()
    }
}

/// Output of the Blahut–Arimoto iteration.
#[derive(Debug, Clone)]
pub struct CapacityResult {
    pub value: f64,
    pub argmax: JointDistribution,
    /// `max_x D(x)` at the final iterate; the true maximum lies in `[value, upper]`.
    pub upper: f64,
    pub iterations: usize,
    /// Objective value after every update, starting from the uniform law.
    pub history: Vec<f64>,
}

impl CapacityResult {
    pub fn is_monotone(&self, tol: f64) -> bool {
        self.history.windows(2).all(|w| w[1] >= w[0] - tol)
    }
}

/// Blahut–Arimoto on the composite input alphabet: the trivial bound
/// `max_{p(x₁,x₂)} I(X₁, X₂; Y)`.
pub fn trivial_bound(ch: &ChannelModel, cfg: &OptimizerConfig) -> Result<CapacityResult> {
    cfg.validate()?;
    let obj = MacObjective::new(ch);
    let k = obj.inputs();
    let mut p = vec![1.0 / k as f64; k];
    let mut history = vec![obj.value(&p)];
    for it in 0..cfg.max_iterations {
        let d = obj.divergences(&p);
        let weights: Vec<f64> = p.iter().zip(&d).map(|(a, b)| a * b.exp2()).collect();
        let z: f64 = weights.iter().sum();
        let lower = z.log2();
        let upper = d.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        p = weights.into_iter().map(|w| w / z).collect();
        history.push(obj.value(&p));
        if upper - lower < cfg.convergence_tol {
            let d = obj.divergences(&p);
            return Ok(CapacityResult {
                value: obj.value(&p),
                argmax: ch.input_joint(&p)?,
                upper: d.into_iter().fold(f64::NEG_INFINITY, f64::max),
                iterations: it + 1,
                history,
            });
        }
    }
    Err(Error::NoConvergence {
        what: "Blahut-Arimoto",
        iterations: cfg.max_iterations,
    })
}

/// Euclidean projection onto the probability simplex.
pub fn project_simplex(v: &[f64]) -> Vec<f64> {
    let mut u = v.to_vec();
    u.sort_by(|a, b| b.total_cmp(a));
    let mut cum = 0.0;
    let mut theta = 0.0;
    for (i, &x) in u.iter().enumerate() {
        cum += x;
        let t = (cum - 1.0) / (i + 1) as f64;
        if x - t > 0.0 {
            theta = t;
        }
    }
    v.iter().map(|x| (x - theta).max(0.0)).collect()
}

fn project_columns(m: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(m.rows(), m.cols());
    for j in 0..m.cols() {
        let col = project_simplex(&m.col(j));
        for (i, v) in col.into_iter().enumerate() {
            out[(i, j)] = v;
        }
    }
    out
}

fn random_stochastic(rng: &mut rng::SeededRng, rows: usize, cols: usize) -> Matrix {
    let cols_data: Vec<Vec<f64>> = (0..cols).map(|_| rng::uniform_simplex(rng, rows)).collect();
    Matrix::from_fn(rows, cols, |i, j| cols_data[j][i])
}

/// Best encoder pair found by [`achievable_sum_rate`].
#[derive(Debug, Clone)]
pub struct AchievableResult {
    /// `I(X₁, X₂; Y)` recomputed from the returned encoders.
    pub value: f64,
    /// `p(x₁ | u)`
    pub encoder_x1: ConditionalKernel,
    /// `p(x₂ | v)`
    pub encoder_x2: ConditionalKernel,
    /// Induced input law `p(x₁, x₂) = Σ p(u, v) p(x₁|u) p(x₂|v)`.
    pub input: JointDistribution,
    /// Index of the restart that produced the result.
    pub best_restart: usize,
}

/// Input law induced by encoders `a = p(x₁|u)`, `b = p(x₂|v)` and source matrix `s`.
fn induced_input(a: &Matrix, s: &Matrix, b: &Matrix) -> Matrix {
    a.matmul(s).matmul(&b.transpose())
}

struct EncoderProblem<'a> {
    obj: &'a MacObjective,
    source: &'a Matrix,
}

impl EncoderProblem<'_> {
    fn value(&self, a: &Matrix, b: &Matrix) -> f64 {
        self.obj.value(induced_input(a, self.source, b).as_slice())
    }

    fn gradient_matrix(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let q = induced_input(a, self.source, b);
        Matrix::from_vec(q.rows(), q.cols(), self.obj.divergences(q.as_slice()))
    }

    /// Projected-gradient ascent in one encoder with the other held fixed.
    /// `first` selects which encoder moves. Returns the new encoder.
    fn half_step(&self, a: &Matrix, b: &Matrix, first: bool, cfg: &OptimizerConfig) -> Matrix {
        let mut cur = if first { a.clone() } else { b.clone() };
        let eval = |m: &Matrix| if first { self.value(m, b) } else { self.value(a, m) };
        let mut f = eval(&cur);
        let mut step = 1.0;
        for _ in 0..200 {
            let g = if first {
                self.gradient_matrix(&cur, b).matmul(&self.source.matmul(&b.transpose()).transpose())
            } else {
                self.gradient_matrix(a, &cur).transpose().matmul(&a.matmul(self.source))
            };
            let mut accepted = None;
            let mut t = step;
            while t > 1e-12 {
                let cand = project_columns(&cur.add(&g.scale(t)));
                let diff = cand.sub(&cur);
                let decrease: f64 = diff.as_slice().iter().zip(g.as_slice()).map(|(d, gg)| d * gg).sum();
                let fc = eval(&cand);
                if fc >= f + 1e-4 * decrease && fc > f {
                    accepted = Some((cand, fc, t));
                    break;
                }
                t *= 0.5;
            }
            match accepted {
                Some((cand, fc, t)) => {
                    let gain = fc - f;
                    cur = cand;
                    f = fc;
                    step = (t * 2.0).min(1e3);
                    if gain < cfg.convergence_tol * 0.1 {
                        break;
                    }
                }
                None => break,
            }
        }
        cur
    }
}

/// Best-found single-letter achievable sum rate `max I(X₁, X₂; Y)` over
/// encoders `p(x₁|u)`, `p(x₂|v)`.
///
/// Alternating maximization: each half-step is concave in the moving encoder
/// and is solved by projected-gradient ascent with backtracking. The problem is
/// not jointly concave, so `cfg.restarts` seeded random starts are run and the
/// best is kept. The value is a lower estimate of the true maximum.
pub fn achievable_sum_rate(
    src: &JointDistribution,
    ch: &ChannelModel,
    cfg: &OptimizerConfig,
) -> Result<AchievableResult> {
    cfg.validate()?;
    let obj = MacObjective::new(ch);
    let problem = EncoderProblem {
        obj: &obj,
        source: src.matrix(),
    };
    let (nx1, nx2) = (ch.x1_alphabet().len(), ch.x2_alphabet().len());
    let (nu, nv) = src.shape();
    let outer_limit = cfg.max_iterations.clamp(1, 500);

    let mut best: Option<(f64, usize, Matrix, Matrix)> = None;
    for r in 0..cfg.restarts {
        let mut rng = rng::substream(cfg.seed, r as u64);
        let mut a = random_stochastic(&mut rng, nx1, nu);
        let mut b = random_stochastic(&mut rng, nx2, nv);
        let mut f = problem.value(&a, &b);
        for _ in 0..outer_limit {
            a = problem.half_step(&a, &b, true, cfg);
            b = problem.half_step(&a, &b, false, cfg);
            let nf = problem.value(&a, &b);
            let gain = nf - f;
            f = nf;
            if gain < cfg.convergence_tol {
                break;
            }
        }
        if best.as_ref().is_none_or(|(bf, ..)| f > *bf) {
            best = Some((f, r, a, b));
        }
    }
    let (_, best_restart, a, b) = best.expect("at least one restart");
    let encoder_x1 = ConditionalKernel::new(src.row_alphabet().clone(), ch.x1_alphabet().clone(), a.clone())?;
    let encoder_x2 = ConditionalKernel::new(src.col_alphabet().clone(), ch.x2_alphabet().clone(), b.clone())?;
    let input = encoded_input(src, &encoder_x1, &encoder_x2, ch)?;
    let value = probcore::channel_mutual_information(&input, ch)?;
    Ok(AchievableResult {
        value,
        encoder_x1,
        encoder_x2,
        input,
        best_restart,
    })
}

/// The channel input law produced by separate encoders acting on a source draw.
pub fn encoded_input(
    src: &JointDistribution,
    encoder_x1: &ConditionalKernel,
    encoder_x2: &ConditionalKernel,
    ch: &ChannelModel,
) -> Result<JointDistribution> {
    if encoder_x1.from_alphabet() != src.row_alphabet() || encoder_x2.from_alphabet() != src.col_alphabet() {
        return Err(Error::AlphabetMismatch("encoder inputs differ from the source alphabets".into()));
    }
    let q = induced_input(encoder_x1.matrix(), src.matrix(), encoder_x2.matrix());
    // re-normalize away rounding so the joint validates at 1e-12
    let total = q.sum();
    JointDistribution::new(ch.x1_alphabet().clone(), ch.x2_alphabet().clone(), q.scale(1.0 / total))
}

/// Largest non-principal singular value of `P̃` for an `r × c` composite input law.
fn max_correlation(p: &[f64], rows: usize, cols: usize) -> f64 {
    if rows == 2 && cols == 2 {
        return binary_lambda2(p);
    }
    let m = Matrix::from_vec(rows, cols, p.to_vec());
    let total = m.sum();
    match JointDistribution::from_matrix(m.scale(1.0 / total)) {
        Ok(j) => spectral::lambda2_stripped(&j).unwrap_or(1.0),
        Err(_) => 1.0,
    }
}

/// Closed form for 2×2 joints: `λ₂ = |ad − bc| / √(p_X(0) p_X(1) p_Y(0) p_Y(1))`.
fn binary_lambda2(p: &[f64]) -> f64 {
    let (a, b, c, d) = (p[0], p[1], p[2], p[3]);
    let den = (a + b) * (c + d) * (a + c) * (b + d);
    if den <= 0.0 {
        0.0
    } else {
        (a * d - b * c).abs() / den.sqrt()
    }
}

/// Pulls `p` toward the product of its marginals just far enough that every
/// non-principal singular value is at most `limit`. Mixing with the product
/// law keeps the marginals and scales all those singular values by `1 − t`.
fn repair(p: &[f64], rows: usize, cols: usize, limit: f64) -> Vec<f64> {
    let lam = max_correlation(p, rows, cols);
    if lam <= limit + FEASIBILITY_TOL * 0.5 {
        return p.to_vec();
    }
    let keep = limit / lam;
    let m = Matrix::from_vec(rows, cols, p.to_vec());
    // divide by the mass so rounding drift is not squared on every call
    let prod = Matrix::outer(&m.row_sums(), &m.col_sums()).scale(1.0 / m.sum());
    p.iter().zip(prod.as_slice()).map(|(a, b)| keep * a + (1.0 - keep) * b).collect()
}

/// Result of the correlation-constrained maximization.
#[derive(Debug, Clone)]
pub struct UpperBoundResult {
    pub value: f64,
    pub argmax: JointDistribution,
    /// The constraint `λᵢ(P̃_{X₁X₂}) ≤ lambda_limit`, `i ≥ 2`.
    pub lambda_limit: f64,
    /// True when an exhaustive grid was searched (binary inputs); false for the multistart heuristic.
    pub certified: bool,
    /// Best grid value before polishing (equals `value` for the heuristic path).
    pub grid_value: f64,
    pub grid_points: usize,
    pub feasible_points: usize,
    /// Largest change of the objective across one grid cell around the grid
    /// optimum; an estimate of the grid's resolution error.
    pub cell_variation: f64,
}

/// Pattern search over directions `e_i − e_j`, keeping iterates feasible via [`repair`].
fn polish(obj: &MacObjective, start: &[f64], rows: usize, cols: usize, limit: f64, step0: f64) -> (f64, Vec<f64>) {
    let k = start.len();
    let mut p = repair(start, rows, cols, limit);
    let mut f = obj.value(&p);
    let mut step = step0;
    let mut evaluations = 0usize;
    while step > 1e-12 && evaluations < 200_000 {
        let mut improved = false;
        for i in 0..k {
            for j in 0..k {
                if i == j || p[j] <= 0.0 {
                    continue;
                }
                let s = step.min(p[j]);
                let mut cand = p.clone();
                cand[i] += s;
                cand[j] -= s;
                let cand = repair(&cand, rows, cols, limit);
                let fc = obj.value(&cand);
                evaluations += 1;
                if fc > f + 1e-15 {
                    p = cand;
                    f = fc;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    (f, p)
}

/// Maximizes `I(X₁, X₂; Y)` over input joints whose non-principal singular
/// values of `P̃_{X₁X₂}` are at most `λ₂(P̃_UV)`.
pub fn constrained_upper_bound(
    src: &JointDistribution,
    ch: &ChannelModel,
    cfg: &OptimizerConfig,
) -> Result<UpperBoundResult> {
    let limit = spectral::lambda2_stripped(src)?;
    constrained_upper_bound_with_limit(limit, ch, cfg)
}

/// [`constrained_upper_bound`] with an explicit correlation limit.
///
/// Binary × binary inputs: every point of the simplex grid at
/// `cfg.grid_resolution` is evaluated, infeasible points dropped, and the best
/// [`POLISH_TOP`] polished by a feasibility-preserving pattern search. Other
/// alphabet sizes use seeded multistart pattern search and are reported as
/// not certified.
pub fn constrained_upper_bound_with_limit(
    limit: f64,
    ch: &ChannelModel,
    cfg: &OptimizerConfig,
) -> Result<UpperBoundResult> {
    cfg.validate()?;
    if !(0.0..=1.0 + FEASIBILITY_TOL).contains(&limit) {
        return Err(Error::InvalidInput(format!("correlation limit {limit} outside [0, 1]")));
    }
    let obj = MacObjective::new(ch);
    let (rows, cols) = (ch.x1_alphabet().len(), ch.x2_alphabet().len());
    if rows == 2 && cols == 2 {
        grid_search(&obj, limit, ch, cfg)
    } else {
        multistart(&obj, limit, ch, cfg)
    }
}

fn grid_search(obj: &MacObjective, limit: f64, ch: &ChannelModel, cfg: &OptimizerConfig) -> Result<UpperBoundResult> {
    let steps = (1.0 / cfg.grid_resolution).round().max(1.0) as usize;
    let h = 1.0 / steps as f64;
    let mut top: Vec<(f64, [f64; 4])> = Vec::with_capacity(POLISH_TOP + 1);
    let (mut points, mut feasible) = (0usize, 0usize);
    for i in 0..=steps {
        for j in 0..=steps - i {
            for k in 0..=steps - i - j {
                let l = steps - i - j - k;
                let p = [i as f64 * h, j as f64 * h, k as f64 * h, l as f64 * h];
                points += 1;
                if binary_lambda2(&p) > limit + FEASIBILITY_TOL {
                    continue;
                }
                feasible += 1;
                let v = obj.value(&p);
                if top.len() < POLISH_TOP || v > top[top.len() - 1].0 {
                    let pos = top.iter().position(|(tv, _)| v > *tv).unwrap_or(top.len());
                    top.insert(pos, (v, p));
                    top.truncate(POLISH_TOP);
                }
            }
        }
    }
    // the independent uniform law is always on the grid and feasible
    let (grid_value, grid_best) = *top.first().ok_or(Error::InfeasibleConstraint)?;

    let mut cell_variation: f64 = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            if a != b && grid_best[b] >= h {
                let mut q = grid_best;
                q[a] += h;
                q[b] -= h;
                if binary_lambda2(&q) <= limit + FEASIBILITY_TOL {
                    cell_variation = cell_variation.max((obj.value(&q) - grid_value).abs());
                }
            }
        }
    }

    let (mut best_v, mut best_p) = (grid_value, grid_best.to_vec());
    for (_, p) in &top {
        let (v, q) = polish(obj, p, 2, 2, limit, h);
        if v > best_v {
            best_v = v;
            best_p = q;
        }
    }
    Ok(UpperBoundResult {
        value: best_v,
        argmax: ch.input_joint(&normalized(&best_p))?,
        lambda_limit: limit,
        certified: true,
        grid_value,
        grid_points: points,
        feasible_points: feasible,
        cell_variation,
    })
}

fn multistart(obj: &MacObjective, limit: f64, ch: &ChannelModel, cfg: &OptimizerConfig) -> Result<UpperBoundResult> {
    let (rows, cols) = (ch.x1_alphabet().len(), ch.x2_alphabet().len());
    let k = rows * cols;
    let mut starts: Vec<Vec<f64>> = Vec::with_capacity(cfg.restarts + 1);
    if let Ok(ba) = trivial_bound(ch, cfg) {
        starts.push(ba.argmax.matrix().as_slice().to_vec());
    }
    for r in 0..cfg.restarts {
        let mut rng = rng::substream(cfg.seed, r as u64);
        starts.push(rng::uniform_simplex(&mut rng, k));
    }
    let mut best: Option<(f64, Vec<f64>)> = None;
    for s in &starts {
        let (v, p) = polish(obj, s, rows, cols, limit, 0.1);
        if best.as_ref().is_none_or(|(bv, _)| v > *bv) {
            best = Some((v, p));
        }
    }
    let (value, p) = best.ok_or(Error::InfeasibleConstraint)?;
    Ok(UpperBoundResult {
        value,
        argmax: ch.input_joint(&normalized(&p))?,
        lambda_limit: limit,
        certified: false,
        grid_value: value,
        grid_points: 0,
        feasible_points: 0,
        cell_variation: f64::NAN,
    })
}

fn normalized(p: &[f64]) -> Vec<f64> {
    let s: f64 = p.iter().sum();
    p.iter().map(|v| v / s).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    InfeasibleByTrivial,
    InfeasibleByUpper,
    FeasibleCandidate,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::InfeasibleByTrivial => "INFEASIBLE_BY_TRIVIAL",
            Verdict::InfeasibleByUpper => "INFEASIBLE_BY_UPPER",
            Verdict::FeasibleCandidate => "FEASIBLE_CANDIDATE",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }

    pub fn is_infeasible(self) -> bool {
        matches!(self, Verdict::InfeasibleByTrivial | Verdict::InfeasibleByUpper)
    }

    /// Compares the source entropy with the three rates. A tie within `tol`
    /// never yields an infeasibility or feasibility claim.
    pub fn decide(entropy: f64, trivial: f64, upper: f64, achievable: f64, tol: f64) -> Verdict {
        if entropy > trivial + tol {
            Verdict::InfeasibleByTrivial
        } else if entropy > upper + tol {
            Verdict::InfeasibleByUpper
        } else if entropy < achievable - tol {
            Verdict::FeasibleCandidate
        } else {
            Verdict::Inconclusive
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// All four rates for one source/channel pair and the resulting verdict. Rates in bits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub source_entropy: f64,
    pub lambda2_uv: f64,
    pub trivial_bound: f64,
    pub achievable_rate: f64,
    pub upper_bound: f64,
    pub upper_certified: bool,
    pub verdict: Verdict,
}

/// Report plus the optimizer outputs behind it.
#[derive(Debug, Clone)]
pub struct Assessment {
    pub report: BoundReport,
    pub trivial: CapacityResult,
    pub achievable: AchievableResult,
    pub upper: UpperBoundResult,
}

pub fn assess_full(src: &JointDistribution, ch: &ChannelModel, cfg: &OptimizerConfig) -> Result<Assessment> {
    cfg.validate()?;
    let trivial = trivial_bound(ch, cfg)?;
    let achievable = achievable_sum_rate(src, ch, cfg)?;
    let upper = constrained_upper_bound(src, ch, cfg)?;
    let source_entropy = src.joint_entropy();
    let verdict = Verdict::decide(
        source_entropy,
        trivial.value,
        upper.value,
        achievable.value,
        cfg.convergence_tol,
    );
    let report = BoundReport {
        source_entropy,
        lambda2_uv: upper.lambda_limit,
        trivial_bound: trivial.value,
        achievable_rate: achievable.value,
        upper_bound: upper.value,
        upper_certified: upper.certified,
        verdict,
    };
    Ok(Assessment {
        report,
        trivial,
        achievable,
        upper,
    })
}

pub fn assess(src: &JointDistribution, ch: &ChannelModel, cfg: &OptimizerConfig) -> Result<BoundReport> {
    Ok(assess_full(src, ch, cfg)?.report)
}
