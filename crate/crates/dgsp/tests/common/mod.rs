//! Shared fixtures: small graphs and deterministic random inputs.

#![allow(dead_code)]

use dgsp::cmat::CMat;
use dgsp::digraph::DiGraph;
use dgsp::rng;
use num_complex::Complex64;

pub fn three_cycle() -> DiGraph<f64> {
    DiGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)]).unwrap()
}

pub fn two_path() -> DiGraph<f64> {
    DiGraph::new(2, vec![(0, 1, 1.0)]).unwrap()
}

/// Deterministic dense Hermitian matrix with entries of modulus O(1).
pub fn random_hermitian(n: usize, seed: u64) -> CMat<f64> {
    let mut counter = 0u64;
    let mut draw = || {
        let v = 2.0 * rng::uniform01(seed, counter) - 1.0;
        counter += 1;
        v
    };
    let mut a = CMat::<f64>::zeros(n, n);
    for i in 0..n {
        let d = draw();
        a[(i, i)] = Complex64::new(d, 0.0);
        for j in (i + 1)..n {
            let z = Complex64::new(draw(), draw());
            a[(i, j)] = z;
            a[(j, i)] = z.conj();
        }
    }
    a
}

pub fn random_complex_signal(n: usize, seed: u64) -> Vec<Complex64> {
    (0..n)
        .map(|i| {
            Complex64::new(
                rng::standard_normal(seed, 2 * i as u64),
                rng::standard_normal(seed, 2 * i as u64 + 1),
            )
        })
        .collect()
}

pub fn random_real_signal(n: usize, seed: u64) -> Vec<f64> {
    (0..n).map(|i| rng::standard_normal(seed, i as u64)).collect()
}

pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}
