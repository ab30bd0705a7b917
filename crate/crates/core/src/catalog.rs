//! Reference channel and sources used by the examples, tests and CLI demos.
//!
//! All alphabets are binary. Source tables list `u = 1` and `v = 1` first, so
//! the source alphabets are `["1", "0"]`. Channel inputs and output use the
//! canonical `["0", "1"]` order.

use crate::matrix::Matrix;
use crate::probcore::{Alphabet, ChannelModel, JointDistribution};

fn bits() -> Alphabet {
    Alphabet::new(["0", "1"]).expect("valid alphabet")
}

fn bits_high_first() -> Alphabet {
    Alphabet::new(["1", "0"]).expect("valid alphabet")
}

/// Binary MAC whose output is a Bernoulli draw with mean `(x₁ + x₂) / 2`:
/// equal inputs come through noiselessly, unequal inputs give a fair coin.
pub fn averaging_channel() -> ChannelModel {
    // columns (x1, x2) = 00, 01, 10, 11; rows y = 0, 1
    let t = Matrix::from_rows(&[[1.0, 0.5, 0.5, 0.0], [0.0, 0.5, 0.5, 1.0]]);
    ChannelModel::new(bits(), bits(), bits(), t).expect("valid channel")
}

fn source(rows: [[f64; 2]; 2]) -> JointDistribution {
    JointDistribution::new(bits_high_first(), bits_high_first(), Matrix::from_rows(&rows)).expect("valid source")
}

/// `p(u, v)` with 1/3 on agreement and 1/6 on disagreement; `H(U,V) ≈ 1.918`, `λ₂ = 1/3`.
pub fn symmetric_source() -> JointDistribution {
    source([[1.0 / 3.0, 1.0 / 6.0], [1.0 / 6.0, 1.0 / 3.0]])
}

/// Mostly `(0, 0)`, never `(1, 1)`; `H(U,V) ≈ 0.922`, `λ₂ = 1/9`.
pub fn sparse_source() -> JointDistribution {
    source([[0.0, 0.1], [0.1, 0.8]])
}

/// Mostly `(1, 0)`; `H(U,V) ≈ 0.748`, `λ₂ ≈ 0.793`.
pub fn skewed_source() -> JointDistribution {
    source([[0.0, 0.85], [0.1, 0.05]])
}

/// The three sources in the order above, with short names.
pub fn sources() -> [(&'static str, JointDistribution); 3] {
    [
        ("symmetric", symmetric_source()),
        ("sparse", sparse_source()),
        ("skewed", skewed_source()),
    ]
}
