//! Complex Hermitian eigendecomposition and principal fractional powers of
//! unitary matrices — the numerical engine behind every transform in the crate.
//!
//! The eigensolver is a cyclic Jacobi iteration specialized to Hermitian
//! matrices: each sweep annihilates every off-diagonal pair with a complex
//! Givens rotation. Jacobi is unconditionally stable on Hermitian input and
//! entirely self-contained, which matters more than asymptotic speed at the
//! graph sizes (n ≤ a few hundred) this crate targets.

use num_complex::Complex;

use crate::cmat::CMat;
use crate::error::{DgspError, Result};
use crate::scalar::Real;

/// Maximum number of full Jacobi sweeps before declaring non-convergence.
const MAX_SWEEPS: usize = 30;

/// An eigendecomposition A = U·diag(values)·U^H of a Hermitian matrix.
///
/// Eigenvalues are real and sorted ascending; `vectors` holds the matching
/// orthonormal eigenvectors as columns, with each column's phase fixed so its
/// largest-magnitude entry is real and positive (ties broken by lowest index).
/// `residual` is the largest achieved column residual ‖A·u − λ·u‖₂.
#[derive(Clone, Debug)]
pub struct HermitianSpectrum<T> {
    pub values: Vec<T>,
    pub vectors: CMat<T>,
    pub residual: T,
}

fn hermiticity_tol<T: Real>() -> T {
    // 1e-12 is the contract tolerance at f64; wider-epsilon scalar types get a
    // floor proportional to their machine epsilon.
    let eps_floor = T::epsilon() * T::of(64.0);
    let base = T::of(1e-12);
    if eps_floor > base {
        eps_floor
    } else {
        base
    }
}

/// Eigendecompose a Hermitian matrix by cyclic Jacobi rotations.
pub fn eig_hermitian<T: Real>(a: &CMat<T>) -> Result<HermitianSpectrum<T>> {
    if !a.is_square() {
        return Err(DgspError::DimensionMismatch("eig_hermitian needs a square matrix".into()));
    }
    if a.has_non_finite() {
        return Err(DgspError::Numerical("non-finite entry in eigensolver input".into()));
    }
    let scale = T::one() + a.max_abs();
    if a.hermitian_defect() > hermiticity_tol::<T>() * scale {
        return Err(DgspError::Numerical("eigensolver input is not Hermitian".into()));
    }

    let n = a.n_rows();
    let mut m = a.clone();
    let mut u = CMat::<T>::identity(n);
    let threshold = hermiticity_tol::<T>() * a.frobenius_norm();

    let mut converged = n <= 1;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                let abs_apq = apq.norm();
                if abs_apq <= threshold {
                    continue;
                }
                rotated = true;
                // Unit phase of the pivot and the classic stable tangent.
                let phase = apq / Complex::new(abs_apq, T::zero());
                let tau = (m[(q, q)].re - m[(p, p)].re) / (T::of(2.0) * abs_apq);
                let t = {
                    let root = (T::one() + tau * tau).sqrt();
                    if tau >= T::zero() {
                        T::one() / (tau + root)
                    } else {
                        -T::one() / (-tau + root)
                    }
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;

                // A ← G^H A G with the plane rotation
                //   G[p][p] = c, G[p][q] = s·phase, G[q][p] = −s·conj(phase), G[q][q] = c.
                let cs = Complex::new(c, T::zero());
                let su = Complex::new(s, T::zero()) * phase;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = mkp * cs - mkq * su.conj();
                    m[(k, q)] = mkp * su + mkq * cs;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = mpk * cs - mqk * su;
                    m[(q, k)] = mpk * su.conj() + mqk * cs;
                }
                // Clean the pivot pair and any rounding drift on the diagonal.
                m[(p, q)] = Complex::new(T::zero(), T::zero());
                m[(q, p)] = Complex::new(T::zero(), T::zero());
                m[(p, p)] = Complex::new(m[(p, p)].re, T::zero());
                m[(q, q)] = Complex::new(m[(q, q)].re, T::zero());

                for k in 0..n {
                    let ukp = u[(k, p)];
                    let ukq = u[(k, q)];
                    u[(k, p)] = ukp * cs - ukq * su.conj();
                    u[(k, q)] = ukp * su + ukq * cs;
                }
            }
        }
        if !rotated || m.off_diagonal_max() <= threshold {
            converged = true;
        }
    }
    if !converged {
        return Err(DgspError::Numerical(format!(
            "Jacobi eigensolver did not converge within {MAX_SWEEPS} sweeps"
        )));
    }

    let mut values: Vec<T> = (0..n).map(|i| m[(i, i)].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).expect("finite eigenvalues"));
    values = order.iter().map(|&i| values[i]).collect();
    let mut vectors = CMat::<T>::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &u.column(src));
    }

    regularize_clusters(&mut values, &mut vectors, scale);
    fix_phases(&mut vectors);

    // Residual against the original matrix certifies the decomposition.
    let mut residual = T::zero();
    for l in 0..n {
        let col = vectors.column(l);
        let av = a.matvec(&col);
        let mut acc = T::zero();
        for i in 0..n {
            let d = av[i] - col[i] * Complex::new(values[l], T::zero());
            acc += d.norm_sqr();
        }
        let r = acc.sqrt();
        if r > residual {
            residual = r;
        }
    }

    Ok(HermitianSpectrum { values, vectors, residual })
}

/// Re-orthonormalize eigenvector groups belonging to (numerically) repeated
/// eigenvalues with modified Gram–Schmidt, so degenerate subspaces come out
/// deterministic and orthonormal to working precision.
fn regularize_clusters<T: Real>(values: &mut [T], vectors: &mut CMat<T>, scale: T) {
    let n = values.len();
    let tol = T::of(1e-9) * scale;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && values[end] - values[end - 1] <= tol {
            end += 1;
        }
        if end - start > 1 {
            for j in start..end {
                let mut col = vectors.column(j);
                for k in start..j {
                    let prev = vectors.column(k);
                    let mut proj = Complex::new(T::zero(), T::zero());
                    for i in 0..n {
                        proj = proj + prev[i].conj() * col[i];
                    }
                    for i in 0..n {
                        col[i] = col[i] - prev[i] * proj;
                    }
                }
                let norm = col.iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, b| a + b).sqrt();
                if norm > T::zero() {
                    let inv = Complex::new(T::one() / norm, T::zero());
                    for z in &mut col {
                        *z = *z * inv;
                    }
                }
                vectors.set_column(j, &col);
            }
        }
        start = end;
    }
}

/// Scale every column so its largest-magnitude entry is real and positive;
/// ties broken by lowest index. This pins the otherwise-arbitrary unit phase.
fn fix_phases<T: Real>(vectors: &mut CMat<T>) {
    let n = vectors.n_rows();
    for j in 0..vectors.n_cols() {
        let mut col = vectors.column(j);
        let mut best = 0;
        for i in 1..n {
            if col[i].norm() > col[best].norm() {
                best = i;
            }
        }
        let z = col[best];
        let r = z.norm();
        if r > T::zero() {
            let factor = z.conj() / Complex::new(r, T::zero());
            for v in &mut col {
                *v = *v * factor;
            }
        }
        vectors.set_column(j, &col);
    }
}

/// Principal fractional power M^α of a unitary matrix, 0 < α ≤ 1.
///
/// Rather than a general nonsymmetric eigensolver, this uses the commuting
/// Hermitian pair C = (M+M^H)/2 and S = (M−M^H)/(2i): a simultaneous
/// eigenbasis is found by diagonalizing C + r·S for an irrational mixing
/// constant r, degenerate groups are refined against S, and each eigenangle
/// θ_k = atan2(w^H S w, w^H C w) on the principal branch (−π, π] is raised to
/// e^{iαθ_k}. Angles within 1e−12 of −π map to +π.
pub fn unitary_fractional_power<T: Real>(m: &CMat<T>, alpha: T) -> Result<CMat<T>> {
    if !m.is_square() {
        return Err(DgspError::DimensionMismatch("fractional power needs a square matrix".into()));
    }
    if !(alpha > T::zero() && alpha <= T::one()) {
        return Err(DgspError::InvalidParameter("alpha must lie in (0, 1]".into()));
    }
    let unitary_tol = {
        let base = T::of(1e-8);
        let floor = T::epsilon() * T::of(512.0);
        if floor > base {
            floor
        } else {
            base
        }
    };
    if m.unitarity_defect() > unitary_tol {
        return Err(DgspError::Numerical("fractional power input is not unitary".into()));
    }

    let n = m.n_rows();
    let mh = m.adjoint();
    let half = Complex::new(T::of(0.5), T::zero());
    // C and S are the "cosine" and "sine" parts of M = C + iS; both Hermitian,
    // both commuting with M, with joint eigenvalues (cos θ, sin θ).
    let c_mat = CMat::from_fn(n, n, |i, j| (m[(i, j)] + mh[(i, j)]) * half);
    let s_mat = CMat::from_fn(n, n, |i, j| {
        // (M − M^H)/(2i) = −i/2 · (M − M^H)
        let d = m[(i, j)] - mh[(i, j)];
        Complex::new(d.im, -d.re) * half
    });

    let r = T::of((5.0f64.sqrt() - 1.0) / 2.0);
    let mix = CMat::from_fn(n, n, |i, j| c_mat[(i, j)] + s_mat[(i, j)] * Complex::new(r, T::zero()));
    let spec = eig_hermitian(&mix)?;
    let mut basis = spec.vectors;

    // Group columns whose C-Rayleigh quotients coincide and re-diagonalize S
    // inside each group, so repeated cos θ with distinct sin θ still separates.
    let rayleigh = |mat: &CMat<T>, basis: &CMat<T>, j: usize| -> T {
        let col = basis.column(j);
        let mv = mat.matvec(&col);
        let mut acc = Complex::new(T::zero(), T::zero());
        for i in 0..n {
            acc = acc + col[i].conj() * mv[i];
        }
        acc.re
    };
    let c_quots: Vec<T> = (0..n).map(|j| rayleigh(&c_mat, &basis, j)).collect();
    let cluster_tol = T::of(1e-7);
    let mut start = 0;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| c_quots[i].partial_cmp(&c_quots[j]).expect("finite quotients"));
    while start < n {
        let mut end = start + 1;
        while end < n && c_quots[order[end]] - c_quots[order[end - 1]] <= cluster_tol {
            end += 1;
        }
        if end - start > 1 {
            refine_cluster(&mut basis, &s_mat, &order[start..end])?;
        }
        start = end;
    }

    let mut angles = Vec::with_capacity(n);
    for j in 0..n {
        let cos_t = rayleigh(&c_mat, &basis, j);
        let sin_t = rayleigh(&s_mat, &basis, j);
        let pi = T::of(std::f64::consts::PI);
        let mut theta = sin_t.atan2(cos_t);
        if theta <= -pi + T::of(1e-12) {
            theta = pi;
        }
        angles.push(theta);
    }

    let mut out = CMat::<T>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for k in 0..n {
                let phase = Complex::from_polar(T::one(), alpha * angles[k]);
                acc = acc + basis[(i, k)] * phase * basis[(j, k)].conj();
            }
            out[(i, j)] = acc;
        }
    }
    if out.unitarity_defect() > unitary_tol {
        return Err(DgspError::Numerical("fractional power lost unitarity".into()));
    }
    Ok(out)
}

/// Re-diagonalize S restricted to the span of the given basis columns and
/// rotate those columns into S-eigenvectors, keeping a deterministic order.
fn refine_cluster<T: Real>(basis: &mut CMat<T>, s_mat: &CMat<T>, cols: &[usize]) -> Result<()> {
    let n = basis.n_rows();
    let m = cols.len();
    let sub_cols: Vec<Vec<Complex<T>>> = cols.iter().map(|&j| basis.column(j)).collect();
    let s_cols: Vec<Vec<Complex<T>>> = sub_cols.iter().map(|c| s_mat.matvec(c)).collect();
    let mut restricted = CMat::<T>::zeros(m, m);
    for a in 0..m {
        for b in 0..m {
            let mut acc = Complex::new(T::zero(), T::zero());
            for i in 0..n {
                acc = acc + sub_cols[a][i].conj() * s_cols[b][i];
            }
            restricted[(a, b)] = acc;
        }
    }
    // Symmetrize away the O(eps) defect before the inner eigensolve.
    let restricted = CMat::from_fn(m, m, |a, b| (restricted[(a, b)] + restricted[(b, a)].conj()) * Complex::new(T::of(0.5), T::zero()));
    let inner = eig_hermitian(&restricted)?;
    for a in 0..m {
        let mut new_col = vec![Complex::new(T::zero(), T::zero()); n];
        for b in 0..m {
            let y = inner.vectors[(b, a)];
            for i in 0..n {
                new_col[i] = new_col[i] + sub_cols[b][i] * y;
            }
        }
        basis.set_column(cols[a], &new_col);
    }
    Ok(())
}

/// Elementwise fractional power of a nonnegative real spectrum, with tiny
/// negative noise (≥ −1e−10) clamped to zero before raising to α.
pub fn real_diag_power<T: Real>(values: &[T], alpha: T) -> Result<Vec<T>> {
    if !(alpha > T::zero() && alpha <= T::one()) {
        return Err(DgspError::InvalidParameter("alpha must lie in (0, 1]".into()));
    }
    values
        .iter()
        .map(|&v| {
            if v < -T::of(1e-10) {
                Err(DgspError::Numerical(format!(
                    "significantly negative eigenvalue {v} in fractional power"
                )))
            } else if v <= T::zero() {
                Ok(T::zero())
            } else if alpha == T::one() {
                Ok(v)
            } else {
                Ok(v.powf(alpha))
            }
        })
        .collect()
}
