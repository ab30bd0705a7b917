//! Distribution algebra over finite labeled alphabets.
//!
//! A [`JointDistribution`] is the matrix `P_XY` with `P_XY(i, j) = Pr(X = x_i, Y = y_j)`.
//! Its normalized form `P̃ = P_X^{-1/2} P_XY P_Y^{-1/2}` (see [`JointDistribution::tilde`])
//! carries the spectral information used everywhere else in the crate.
//!
//! All logarithms are base 2, so every information quantity is in bits.

use crate::error::{Axis, Error, Result};
use crate::matrix::{kron_vec, Matrix};

/// Tolerance on total mass and on stochastic columns.
pub const MASS_TOL: f64 = 1e-12;

/// Entries at or below this value count as structural zeros in support logic.
pub const SUPPORT_TOL: f64 = 1e-15;

/// Maximum number of symbols on either axis of any matrix the crate builds.
pub const MAX_ALPHABET: usize = 4096;

/// An ordered list of unique symbol labels. The order is the indexing
/// contract for every matrix built over the alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidInput("alphabet must have at least one symbol".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(Error::InvalidInput(format!("duplicate symbol {s:?} in alphabet")));
            }
        }
        Ok(Self { symbols })
    }

    /// The alphabet `{"0", "1", …, "n-1"}`.
    pub fn indexed(n: usize) -> Self {
        assert!(n >= 1, "alphabet must have at least one symbol");
        Self {
            symbols: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, i: usize) -> &str {
        &self.symbols[i]
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }

    /// Product alphabet in lexicographic (first-factor-major) order, labels joined by `,`.
    pub fn product(&self, other: &Alphabet) -> Alphabet {
        let symbols = self
            .symbols
            .iter()
            .flat_map(|a| other.symbols.iter().map(move |b| format!("{a},{b}")))
            .collect();
        Alphabet { symbols }
    }

    fn subset(&self, keep: &[usize]) -> Alphabet {
        Alphabet {
            symbols: keep.iter().map(|&i| self.symbols[i].clone()).collect(),
        }
    }
}

/// Shannon entropy in bits of a list of masses, with `0 log 0 = 0`.
pub fn entropy(p: &[f64]) -> f64 {
    -p.iter()
        .filter(|&&v| v > 0.0)
        .map(|&v| v * v.log2())
        .sum::<f64>()
}

/// Binary entropy function in bits.
pub fn binary_entropy(p: f64) -> f64 {
    entropy(&[p, 1.0 - p])
}

fn check_cap(rows: usize, cols: usize) -> Result<()> {
    if rows > MAX_ALPHABET || cols > MAX_ALPHABET {
        return Err(Error::SizeCapExceeded {
            rows,
            cols,
            cap: MAX_ALPHABET,
        });
    }
    Ok(())
}

fn check_entries(m: &Matrix) -> Result<()> {
    if let Some(v) = m.as_slice().iter().find(|v| !v.is_finite() || **v < 0.0) {
        return Err(Error::InvalidDistribution(format!("entry {v} is negative or not finite")));
    }
    Ok(())
}

/// A joint probability mass function over a pair of finite alphabets.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    row_alphabet: Alphabet,
    col_alphabet: Alphabet,
    matrix: Matrix,
}

impl JointDistribution {
    pub fn new(row_alphabet: Alphabet, col_alphabet: Alphabet, matrix: Matrix) -> Result<Self> {
        if matrix.shape() != (row_alphabet.len(), col_alphabet.len()) {
            return Err(Error::AlphabetMismatch(format!(
                "matrix is {}x{} but alphabets have {} and {} symbols",
                matrix.rows(),
                matrix.cols(),
                row_alphabet.len(),
                col_alphabet.len()
            )));
        }
        check_cap(matrix.rows(), matrix.cols())?;
        check_entries(&matrix)?;
        let total = matrix.sum();
        if (total - 1.0).abs() > MASS_TOL {
            return Err(Error::InvalidDistribution(format!("total mass is {total}, expected 1")));
        }
        Ok(Self {
            row_alphabet,
            col_alphabet,
            matrix,
        })
    }

    /// Joint over indexed alphabets from row-major data.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let m = Matrix::from_rows(rows);
        Self::new(Alphabet::indexed(m.rows()), Alphabet::indexed(m.cols()), m)
    }

    pub fn from_matrix(matrix: Matrix) -> Result<Self> {
        Self::new(Alphabet::indexed(matrix.rows()), Alphabet::indexed(matrix.cols()), matrix)
    }

    /// Wraps a matrix without checking any invariant. Only meant for
    /// exercising validators on deliberately malformed input.
    pub fn new_unchecked(matrix: Matrix) -> Self {
        Self {
            row_alphabet: Alphabet::indexed(matrix.rows()),
            col_alphabet: Alphabet::indexed(matrix.cols()),
            matrix,
        }
    }

    /// The independent joint `p_X p_Yᵀ`.
    pub fn product(p_x: &[f64], p_y: &[f64]) -> Result<Self> {
        Self::from_matrix(Matrix::outer(p_x, p_y))
    }

    pub fn row_alphabet(&self) -> &Alphabet {
        &self.row_alphabet
    }

    pub fn col_alphabet(&self) -> &Alphabet {
        &self.col_alphabet
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn shape(&self) -> (usize, usize) {
        self.matrix.shape()
    }

    pub fn transpose(&self) -> Self {
        Self {
            row_alphabet: self.col_alphabet.clone(),
            col_alphabet: self.row_alphabet.clone(),
            matrix: self.matrix.transpose(),
        }
    }

    /// Row and column marginals `(p_X, p_Y)`.
    pub fn marginals(&self) -> (Vec<f64>, Vec<f64>) {
        (self.matrix.row_sums(), self.matrix.col_sums())
    }

    pub fn has_zero_mass(&self) -> bool {
        let (p_x, p_y) = self.marginals();
        p_x.iter().chain(&p_y).any(|&v| v <= SUPPORT_TOL)
    }

    /// Drops every row and column whose marginal mass is a structural zero.
    /// The remaining matrix is renormalized to total mass 1.
    pub fn strip_zero_mass(&self) -> Self {
        let mut out = self.strip_zero_mass_unnormalized();
        if out.shape() != self.shape() {
            let total = out.matrix.sum();
            out.matrix = out.matrix.scale(1.0 / total);
        }
        out
    }

    /// Like [`strip_zero_mass`](Self::strip_zero_mass) but leaves the remaining entries untouched.
    pub fn strip_zero_mass_unnormalized(&self) -> Self {
        let (p_x, p_y) = self.marginals();
        let rows: Vec<usize> = (0..p_x.len()).filter(|&i| p_x[i] > SUPPORT_TOL).collect();
        let cols: Vec<usize> = (0..p_y.len()).filter(|&j| p_y[j] > SUPPORT_TOL).collect();
        if rows.len() == p_x.len() && cols.len() == p_y.len() {
            return self.clone();
        }
        Self {
            row_alphabet: self.row_alphabet.subset(&rows),
            col_alphabet: self.col_alphabet.subset(&cols),
            matrix: self.matrix.select(&rows, &cols),
        }
    }

    fn positive_marginals(&self) -> Result<(Vec<f64>, Vec<f64>)> {
        let (p_x, p_y) = self.marginals();
        if let Some(i) = p_x.iter().position(|&v| v <= SUPPORT_TOL) {
            return Err(Error::ZeroMassSymbol {
                axis: Axis::Row,
                symbol: self.row_alphabet.symbol(i).to_string(),
            });
        }
        if let Some(j) = p_y.iter().position(|&v| v <= SUPPORT_TOL) {
            return Err(Error::ZeroMassSymbol {
                axis: Axis::Col,
                symbol: self.col_alphabet.symbol(j).to_string(),
            });
        }
        Ok((p_x, p_y))
    }

    /// Conditional law of one variable given the other.
    ///
    /// `given = Axis::Col` yields `P_{X|Y}` (from the column alphabet to the row
    /// alphabet); `given = Axis::Row` yields `P_{Y|X}`.
    pub fn conditional(&self, given: Axis) -> Result<ConditionalKernel> {
        let (p_x, p_y) = self.positive_marginals()?;
        match given {
            Axis::Col => {
                let inv: Vec<f64> = p_y.iter().map(|v| 1.0 / v).collect();
                let ones = vec![1.0; p_x.len()];
                Ok(ConditionalKernel {
                    from_alphabet: self.col_alphabet.clone(),
                    to_alphabet: self.row_alphabet.clone(),
                    matrix: self.matrix.scale_rows_cols(&ones, &inv),
                })
            }
            Axis::Row => self.transpose().conditional(Axis::Col),
        }
    }

    /// `P̃ = P_X^{-1/2} P_XY P_Y^{-1/2}`.
    pub fn tilde(&self) -> Result<Matrix> {
        let (p_x, p_y) = self.positive_marginals()?;
        let left: Vec<f64> = p_x.iter().map(|v| 1.0 / v.sqrt()).collect();
        let right: Vec<f64> = p_y.iter().map(|v| 1.0 / v.sqrt()).collect();
        Ok(self.matrix.scale_rows_cols(&left, &right))
    }

    /// Joint law of a pair of independent draws: `self ⊗ other` over product alphabets.
    pub fn kron(&self, other: &JointDistribution) -> Result<Self> {
        let (r, c) = (self.shape().0 * other.shape().0, self.shape().1 * other.shape().1);
        check_cap(r, c)?;
        Ok(Self {
            row_alphabet: self.row_alphabet.product(&other.row_alphabet),
            col_alphabet: self.col_alphabet.product(&other.col_alphabet),
            matrix: self.matrix.kron(&other.matrix),
        })
    }

    /// `P_XY^{⊗n}`, the joint of `n` i.i.d. pairs.
    pub fn kron_power(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("Kronecker power needs n >= 1".into()));
        }
        let (m, k) = self.shape();
        let fits = |base: usize| {
            (0..n).try_fold(1usize, |acc, _| acc.checked_mul(base).filter(|v| *v <= MAX_ALPHABET))
        };
        match (fits(m), fits(k)) {
            (Some(_), Some(_)) => {}
            _ => {
                return Err(Error::SizeCapExceeded {
                    rows: m.saturating_pow(n as u32),
                    cols: k.saturating_pow(n as u32),
                    cap: MAX_ALPHABET,
                })
            }
        }
        let mut out = self.clone();
        for _ in 1..n {
            out = out.kron(self)?;
        }
        Ok(out)
    }

    /// `H(X, Y)` in bits.
    pub fn joint_entropy(&self) -> f64 {
        entropy(self.matrix.as_slice())
    }

    /// `I(X; Y) = H(X) + H(Y) − H(X, Y)` in bits, clamped at 0 against rounding.
    pub fn mutual_information(&self) -> f64 {
        let (p_x, p_y) = self.marginals();
        (entropy(&p_x) + entropy(&p_y) - self.joint_entropy()).max(0.0)
    }
}

/// Kronecker power of a probability vector, first factor major.
pub fn kron_power_vec(p: &[f64], n: usize) -> Vec<f64> {
    (1..n).fold(p.to_vec(), |acc, _| kron_vec(&acc, p))
}

fn check_column_stochastic(m: &Matrix, what: &str) -> Result<()> {
    check_entries(m)?;
    for (j, s) in m.col_sums().iter().enumerate() {
        if (s - 1.0).abs() > MASS_TOL {
            return Err(Error::InvalidDistribution(format!(
                "{what} column {j} sums to {s}, expected 1"
            )));
        }
    }
    Ok(())
}

/// A column-stochastic matrix with entry `(i, j) = P(to = i | from = j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionalKernel {
    from_alphabet: Alphabet,
    to_alphabet: Alphabet,
    matrix: Matrix,
}

impl ConditionalKernel {
    pub fn new(from_alphabet: Alphabet, to_alphabet: Alphabet, matrix: Matrix) -> Result<Self> {
        if matrix.shape() != (to_alphabet.len(), from_alphabet.len()) {
            return Err(Error::AlphabetMismatch(format!(
                "kernel matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                to_alphabet.len(),
                from_alphabet.len()
            )));
        }
        check_column_stochastic(&matrix, "kernel")?;
        Ok(Self {
            from_alphabet,
            to_alphabet,
            matrix,
        })
    }

    /// Kernel over indexed alphabets; `matrix` is `|to| × |from|`.
    pub fn from_matrix(matrix: Matrix) -> Result<Self> {
        Self::new(Alphabet::indexed(matrix.cols()), Alphabet::indexed(matrix.rows()), matrix)
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        Self {
            from_alphabet: alphabet.clone(),
            to_alphabet: alphabet.clone(),
            matrix: Matrix::identity(alphabet.len()),
        }
    }

    /// Every column equal to `q`: the output ignores the input.
    pub fn constant(from: &Alphabet, q: &[f64]) -> Result<Self> {
        let m = Matrix::from_fn(q.len(), from.len(), |i, _| q[i]);
        Self::new(from.clone(), Alphabet::indexed(q.len()), m)
    }

    pub fn from_alphabet(&self) -> &Alphabet {
        &self.from_alphabet
    }

    pub fn to_alphabet(&self) -> &Alphabet {
        &self.to_alphabet
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Joint of `(from, to)` when `from ~ p_from`: entry `(j, k) = p_from(j) K(k | j)`.
    pub fn joint_with_input(&self, p_from: &[f64]) -> Result<JointDistribution> {
        if p_from.len() != self.from_alphabet.len() {
            return Err(Error::AlphabetMismatch("input law length differs from kernel input".into()));
        }
        let m = Matrix::from_fn(p_from.len(), self.to_alphabet.len(), |j, k| {
            p_from[j] * self.matrix[(k, j)]
        });
        JointDistribution::new(self.from_alphabet.clone(), self.to_alphabet.clone(), m)
    }
}

/// A discrete memoryless two-user multiple-access channel `p(y | x₁, x₂)`.
///
/// Transition columns are indexed by the composite input in `x₁`-major order:
/// column `i * |X₂| + j` holds `p(· | x₁ = i, x₂ = j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelModel {
    x1_alphabet: Alphabet,
    x2_alphabet: Alphabet,
    y_alphabet: Alphabet,
    transition: Matrix,
}

impl ChannelModel {
    pub fn new(
        x1_alphabet: Alphabet,
        x2_alphabet: Alphabet,
        y_alphabet: Alphabet,
        transition: Matrix,
    ) -> Result<Self> {
        let expected = (y_alphabet.len(), x1_alphabet.len() * x2_alphabet.len());
        if transition.shape() != expected {
            return Err(Error::AlphabetMismatch(format!(
                "transition matrix is {}x{}, expected {}x{}",
                transition.rows(),
                transition.cols(),
                expected.0,
                expected.1
            )));
        }
        check_cap(transition.rows(), transition.cols())?;
        check_column_stochastic(&transition, "transition")?;
        Ok(Self {
            x1_alphabet,
            x2_alphabet,
            y_alphabet,
            transition,
        })
    }

    pub fn x1_alphabet(&self) -> &Alphabet {
        &self.x1_alphabet
    }

    pub fn x2_alphabet(&self) -> &Alphabet {
        &self.x2_alphabet
    }

    pub fn y_alphabet(&self) -> &Alphabet {
        &self.y_alphabet
    }

    pub fn transition(&self) -> &Matrix {
        &self.transition
    }

    pub fn input_count(&self) -> usize {
        self.transition.cols()
    }

    /// `p(· | x₁, x₂)` as a column vector.
    pub fn column(&self, x1: usize, x2: usize) -> Vec<f64> {
        self.transition.col(x1 * self.x2_alphabet.len() + x2)
    }

    /// `I((X₁, X₂); Y)` for a composite input law given as an `x₁`-major vector.
    pub fn mutual_information_vec(&self, input: &[f64]) -> f64 {
        debug_assert_eq!(input.len(), self.input_count());
        let q = self.transition.mul_vec(input);
        let mut conditional = 0.0;
        for (x, &px) in input.iter().enumerate() {
            if px > 0.0 {
                let col: Vec<f64> = (0..self.transition.rows()).map(|y| self.transition[(y, x)]).collect();
                conditional += px * entropy(&col);
            }
        }
        (entropy(&q) - conditional).max(0.0)
    }

    /// Wraps an `x₁`-major composite input vector as a joint over `X₁ × X₂`.
    pub fn input_joint(&self, input: &[f64]) -> Result<JointDistribution> {
        let m = Matrix::from_vec(self.x1_alphabet.len(), self.x2_alphabet.len(), input.to_vec());
        JointDistribution::new(self.x1_alphabet.clone(), self.x2_alphabet.clone(), m)
    }
}

/// `I((X₁, X₂); Y)` for the input law `input` over `X₁ × X₂` pushed through `ch`.
pub fn channel_mutual_information(input: &JointDistribution, ch: &ChannelModel) -> Result<f64> {
    if input.row_alphabet() != ch.x1_alphabet() || input.col_alphabet() != ch.x2_alphabet() {
        return Err(Error::AlphabetMismatch(
            "input alphabets differ from the channel's input alphabets".into(),
        ));
    }
    Ok(ch.mutual_information_vec(input.matrix().as_slice()))
}
