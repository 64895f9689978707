//! Brute-force reference implementations for the test suite.
//!
//! Everything here evaluates defining formulas by explicit loops or closed
//! forms, deliberately avoiding the main crate's code paths, so the two can
//! cross-check each other on small instances. These functions are slow and
//! size-guarded; they are not part of the shipped API.

use dgsp::cmat::CMat;
use dgsp::digraph::DiGraph;
use dgsp::laplacian::FractionalSpectrum;
use num_complex::Complex64;

/// Largest instance the matrix/vector oracles accept.
pub const MAX_ORACLE_N: usize = 16;

/// Entrywise evaluation of the Hermitian Laplacian
/// L[i][j] = Ds[i]·1[i=j] − e^{2πiq(w_ij − w_ji)}·(w_ij + w_ji)/2,
/// built with explicit loops independent of the library's constructor.
pub fn oracle_laplacian(g: &DiGraph<f64>, q: f64) -> CMat<f64> {
    let n = g.n();
    assert!(n <= MAX_ORACLE_N, "oracle size guard: n={n} > {MAX_ORACLE_N}");
    let mut ws = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            ws[i][j] = 0.5 * (g.weight(i, j) + g.weight(j, i));
        }
    }
    let mut ds = vec![0.0; n];
    for i in 0..n {
        for j in 0..n {
            ds[i] += ws[i][j];
        }
    }
    let mut l = CMat::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let phase = 2.0 * std::f64::consts::PI * q * (g.weight(i, j) - g.weight(j, i));
            let gamma = Complex64::new(phase.cos(), phase.sin());
            l[(i, j)] = -gamma * ws[i][j];
            if i == j {
                l[(i, j)] += Complex64::new(ds[i], 0.0);
            }
        }
    }
    l
}

/// Termwise double-sum evaluation of spectral convolution:
/// out(n) = Σ_ℓ f̂(ℓ)·ĝ(ℓ)·p_ℓ(n), with each coefficient itself expanded as
/// an explicit inner-product sum over vertices.
pub fn oracle_convolution(
    f: &[Complex64],
    g: &[Complex64],
    fs: &FractionalSpectrum<f64>,
) -> Vec<Complex64> {
    let n = fs.n();
    assert!(n <= MAX_ORACLE_N, "oracle size guard: n={n} > {MAX_ORACLE_N}");
    assert_eq!(f.len(), n);
    assert_eq!(g.len(), n);
    let coeff = |signal: &[Complex64], l: usize| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for v in 0..n {
            acc += fs.p[(v, l)].conj() * signal[v];
        }
        acc
    };
    (0..n)
        .map(|v| {
            let mut acc = Complex64::new(0.0, 0.0);
            for l in 0..n {
                acc += coeff(f, l) * coeff(g, l) * fs.p[(v, l)];
            }
            acc
        })
        .collect()
}

/// Eigenvalues of a Hermitian matrix (n ≤ 4) via the characteristic
/// polynomial: coefficients by the Faddeev–LeVerrier recurrence, roots by the
/// closed-form quadratic/cubic/quartic formulas, each polished with a few
/// Newton steps. Returned ascending.
pub fn oracle_charpoly_eigs(a: &CMat<f64>) -> Vec<f64> {
    let n = a.n_rows();
    assert!(a.is_square() && n >= 1 && n <= 4, "oracle size guard: need 1 <= n <= 4");

    // Faddeev–LeVerrier: M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A(M_k + c_k I).
    // p(λ) = λ^n + c_1 λ^{n-1} + … + c_n, with real c_k for Hermitian A.
    let mut coeffs = vec![1.0f64];
    let mut m = a.clone();
    for k in 1..=n {
        let trace: Complex64 = (0..n).map(|i| m[(i, i)]).sum();
        let c = -trace.re / k as f64;
        coeffs.push(c);
        if k < n {
            let mut shifted = m.clone();
            for i in 0..n {
                shifted[(i, i)] += Complex64::new(c, 0.0);
            }
            m = a.mul(&shifted);
        }
    }

    let mut roots = real_poly_roots(&coeffs);
    for r in &mut roots {
        *r = newton_polish(&coeffs, *r);
    }
    roots.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    roots
}

/// All-real root finder for monic polynomials of degree 1–4 (valid because the
/// characteristic polynomial of a Hermitian matrix splits over the reals).
fn real_poly_roots(coeffs: &[f64]) -> Vec<f64> {
    match coeffs.len() - 1 {
        1 => vec![-coeffs[1]],
        2 => quadratic_roots(coeffs[1], coeffs[2]),
        3 => cubic_roots(coeffs[1], coeffs[2], coeffs[3]),
        4 => quartic_roots(coeffs[1], coeffs[2], coeffs[3], coeffs[4]),
        d => unreachable!("unsupported degree {d}"),
    }
}

/// Roots of λ² + bλ + c, clamping tiny negative discriminants to zero.
fn quadratic_roots(b: f64, c: f64) -> Vec<f64> {
    let disc = (b * b - 4.0 * c).max(0.0);
    let s = disc.sqrt();
    vec![(-b - s) / 2.0, (-b + s) / 2.0]
}

/// Roots of λ³ + bλ² + cλ + d by the trigonometric (Viète) method for the
/// three-real-root case.
fn cubic_roots(b: f64, c: f64, d: f64) -> Vec<f64> {
    // Depress: λ = t − b/3 gives t³ + pt + q.
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let shift = -b / 3.0;
    if p.abs() < 1e-300 {
        let r = -q.cbrt() + shift;
        return vec![r, r, r];
    }
    let m = 2.0 * (-p / 3.0).max(0.0).sqrt();
    let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
    let acos = arg.acos();
    (0..3)
        .map(|k| m * ((acos - 2.0 * std::f64::consts::PI * k as f64) / 3.0).cos() + shift)
        .collect()
}

/// Roots of λ⁴ + bλ³ + cλ² + dλ + e via the resolvent-cubic factorization
/// into two quadratics.
fn quartic_roots(b: f64, c: f64, d: f64, e: f64) -> Vec<f64> {
    // Depress: λ = y − b/4 gives y⁴ + py² + qy + r.
    let p = c - 3.0 * b * b / 8.0;
    let q = d - b * c / 2.0 + b * b * b / 8.0;
    let r = e - b * d / 4.0 + b * b * c / 16.0 - 3.0 * b * b * b * b / 256.0;
    let shift = -b / 4.0;

    let ys = if q.abs() < 1e-10 {
        // Biquadratic: y² solves t² + pt + r.
        let ts = quadratic_roots(p, r);
        let mut out = Vec::with_capacity(4);
        for t in ts {
            let s = t.max(0.0).sqrt();
            out.push(-s);
            out.push(s);
        }
        out
    } else {
        // (y² + sy + u)(y² − sy + v) with z = s² the largest root of the
        // resolvent z³ + 2pz² + (p² − 4r)z − q² = 0.
        let z = cubic_roots(2.0 * p, p * p - 4.0 * r, -q * q)
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max)
            .max(1e-300);
        let s = z.sqrt();
        let u = (p + z - q / s) / 2.0;
        let v = (p + z + q / s) / 2.0;
        let mut out = quadratic_roots(s, u);
        out.extend(quadratic_roots(-s, v));
        out
    };
    ys.into_iter().map(|y| y + shift).collect()
}

/// A few Newton iterations on the monic polynomial given by `coeffs`.
fn newton_polish(coeffs: &[f64], mut x: f64) -> f64 {
    for _ in 0..50 {
        let mut val = 0.0;
        let mut deriv = 0.0;
        for &c in coeffs {
            deriv = deriv * x + val;
            val = val * x + c;
        }
        if deriv.abs() < 1e-300 {
            break;
        }
        let step = val / deriv;
        x -= step;
        if step.abs() <= 1e-15 * (1.0 + x.abs()) {
            break;
        }
    }
    x
}
