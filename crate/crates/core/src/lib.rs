//! Single-letter sum-rate bounds for discrete memoryless multiple-access
//! channels fed by a pair of correlated sources.
//!
//! The crate is built around the normalized joint matrix
//! `P̃ = P_X^{-1/2} P_XY P_Y^{-1/2}` and its singular values:
//!
//! - [`probcore`]: joint, conditional and channel matrices and information measures.
//! - [`spectral`]: a small Jacobi SVD, spectral validation of joints, i.i.d. spectra
//!   and decomposition detection.
//! - [`dpi`]: Markov chains `X → Y → Z` and the singular-value data-processing inequality.
//! - [`asymptotic`]: the block-rescaling construction showing `λ₂` of an encoder
//!   joint can be pushed arbitrarily close to 1.
//! - [`bounds`]: the trivial bound, the single-letter achievable rate and the
//!   correlation-constrained upper bound, plus a feasibility verdict.
//! - [`model`] and [`cli`]: model files, reports and the command-line front end.

pub mod asymptotic;
pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod dpi;
pub mod error;
pub mod matrix;
pub mod model;
pub mod probcore;
pub mod rng;
pub mod spectral;
pub mod verify;

pub use error::{Axis, Error, Result};
pub use matrix::Matrix;
pub use probcore::{channel_mutual_information, Alphabet, ChannelModel, ConditionalKernel, JointDistribution};
pub use spectral::{lambda2, profile_of, svd_small, SpectralProfile};
