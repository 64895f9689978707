//! Spectral signal processing on directed graphs.
//!
//! The pipeline: a directed graph's edge directions are folded into the
//! phases of a Hermitian Laplacian L = D_s − Γ_q ⊙ W_s, whose unitary
//! eigenbasis U is raised to a fractional order α (principal matrix power)
//! to give a transform basis P = U^α. Signals are analyzed as f̂ = P^H·f,
//! filtered by per-eigenvalue multipliers, and reconstructed as P·ĉ.
//!
//! All numerics are generic over the scalar type ([`scalar::Real`], i.e. f32
//! or f64); the type aliases at the crate root fix f64, which every bundled
//! experiment uses. All randomness is counter-based ([`rng`]) so experiment
//! outputs are byte-identical across platforms and thread counts.

pub mod cli;
pub mod cmat;
pub mod datasets;
pub mod digraph;
pub mod eigen;
pub mod error;
pub mod filters;
pub mod laplacian;
pub mod metrics;
pub mod rng;
pub mod scalar;
pub mod transform;

pub use error::{DgspError, Result};

/// Default-precision aliases; the CLI and experiments work at f64.
pub type DiGraph = digraph::DiGraph<f64>;
pub type GraphSignal = digraph::GraphSignal<f64>;
pub type CMat = cmat::CMat<f64>;
pub type HermitianSpectrum = eigen::HermitianSpectrum<f64>;
pub type HermitianLaplacian = laplacian::HermitianLaplacian<f64>;
pub type FractionalSpectrum = laplacian::FractionalSpectrum<f64>;
pub type SpectralCoefficients = transform::SpectralCoefficients<f64>;
pub type SpectralKernel = filters::SpectralKernel<f64>;
