//! Smoothness and error metrics, plus seeded Gaussian noise for experiments.

use num_complex::Complex;

use crate::digraph::DiGraph;
use crate::error::{DgspError, Result};
use crate::laplacian::FractionalSpectrum;
use crate::rng;
use crate::scalar::Real;

/// Total variation of a real signal over the directed edge set:
/// Σ_{(i,j)∈E} |f(i) − f(j)|². Each directed edge counts once, so a
/// bidirectional pair contributes twice.
pub fn total_variation<T: Real>(f: &[T], g: &DiGraph<T>) -> Result<T> {
    let complex: Vec<Complex<T>> = f.iter().map(|&x| Complex::new(x, T::zero())).collect();
    total_variation_complex(&complex, g)
}

/// Total variation of a complex signal (squared modulus of edge differences).
pub fn total_variation_complex<T: Real>(f: &[Complex<T>], g: &DiGraph<T>) -> Result<T> {
    if f.len() != g.n() {
        return Err(DgspError::DimensionMismatch(format!(
            "signal length {} vs graph size {}",
            f.len(),
            g.n()
        )));
    }
    Ok(g.edges()
        .iter()
        .map(|&(i, j, _)| (f[i] - f[j]).norm_sqr())
        .fold(T::zero(), |a, b| a + b))
}

/// Root mean square error between two equal-length real signals.
pub fn rmse<T: Real>(a: &[T], b: &[T]) -> Result<T> {
    if a.len() != b.len() {
        return Err(DgspError::DimensionMismatch(format!("lengths {} vs {}", a.len(), b.len())));
    }
    let n = T::from_usize_(a.len());
    let sum = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| (x - y) * (x - y))
        .fold(T::zero(), |acc, d| acc + d);
    Ok((sum / n).sqrt())
}

fn l2<T: Real>(v: &[T]) -> T {
    v.iter().map(|&x| x * x).fold(T::zero(), |a, b| a + b).sqrt()
}

/// Recovery-error triple for a denoising run:
/// e_f = ‖x_rec − x_true‖/‖x_true‖, e = ‖noise‖/‖x_true‖, and their ratio.
pub fn relative_recovery_error<T: Real>(
    x_rec: &[T],
    x_true: &[T],
    noise: &[T],
) -> Result<(T, T, T)> {
    if x_rec.len() != x_true.len() || noise.len() != x_true.len() {
        return Err(DgspError::DimensionMismatch("recovery-error inputs disagree in length".into()));
    }
    let denom = l2(x_true);
    if denom == T::zero() {
        return Err(DgspError::InvalidParameter("true signal is identically zero".into()));
    }
    let noise_norm = l2(noise);
    if noise_norm == T::zero() {
        return Err(DgspError::InvalidParameter("noise is identically zero; ratio undefined".into()));
    }
    let diff: Vec<T> = x_rec.iter().zip(x_true).map(|(&a, &b)| a - b).collect();
    let e_f = l2(&diff) / denom;
    let e = noise_norm / denom;
    Ok((e_f, e, e_f / e))
}

/// n independent N(0, σ²) draws, a pure function of (n, σ, seed). The i-th
/// sample uses counters (2i, 2i+1) of the crate's counter-based generator, so
/// output is byte-identical across platforms and thread counts.
pub fn gaussian_noise<T: Real>(n: usize, sigma: T, seed: u64) -> Result<Vec<T>> {
    if !(sigma > T::zero()) {
        return Err(DgspError::InvalidParameter("sigma must be positive".into()));
    }
    Ok((0..n)
        .map(|i| sigma * T::of(rng::standard_normal(seed, i as u64)))
        .collect())
}

/// Total variation of every fractional basis vector, in ascending-ξ order.
pub fn tv_spectrum<T: Real>(fs: &FractionalSpectrum<T>, g: &DiGraph<T>) -> Result<Vec<T>> {
    if fs.n() != g.n() {
        return Err(DgspError::DimensionMismatch(format!(
            "spectrum size {} vs graph size {}",
            fs.n(),
            g.n()
        )));
    }
    (0..fs.n())
        .map(|l| total_variation_complex(&fs.p.column(l), g))
        .collect()
}

/// One Monte-Carlo run record: the derived seed and both error measures.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RunRecord {
    pub seed: u64,
    pub rmse: f64,
    pub relative_error: f64,
}

/// Aggregate of a Monte-Carlo experiment; `rmse` and `relative_error` are the
/// means of the per-run values.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ExperimentStats {
    pub rmse: f64,
    pub relative_error: f64,
    pub runs: usize,
    pub per_run: Vec<RunRecord>,
}

impl ExperimentStats {
    pub fn from_runs(per_run: Vec<RunRecord>) -> Self {
        let runs = per_run.len();
        let inv = 1.0 / runs.max(1) as f64;
        let rmse = per_run.iter().map(|r| r.rmse).sum::<f64>() * inv;
        let relative_error = per_run.iter().map(|r| r.relative_error).sum::<f64>() * inv;
        Self { rmse, relative_error, runs, per_run }
    }
}
