//! Rotation-encoded Hermitian Laplacians of directed graphs and their
//! fractional spectra.
//!
//! Direction information survives symmetrization through a unit-modulus phase
//! matrix: L = D_s − Γ_q ⊙ W_s, where W_s averages each weight with its
//! reverse, D_s is the matching degree matrix, and Γ_q(i,j) = e^{2πiq(w_ij −
//! w_ji)} rotates each entry by the weight asymmetry. The exponent is
//! antisymmetric, so L is Hermitian for every q, and q = 0 recovers the
//! classical real Laplacian of the symmetrized graph.

use num_complex::Complex;

use crate::cmat::CMat;
use crate::digraph::DiGraph;
use crate::eigen::{self, HermitianSpectrum};
use crate::error::{DgspError, Result};
use crate::scalar::Real;

/// The Hermitian Laplacian of a digraph together with the pieces it was
/// assembled from.
#[derive(Clone, Debug)]
pub struct HermitianLaplacian<T> {
    pub l: CMat<T>,
    pub q: T,
    /// Symmetrized weights (W + W^T)/2, stored dense.
    pub ws: Vec<Vec<T>>,
    /// Diagonal of the symmetrized degree matrix.
    pub ds: Vec<T>,
}

/// Fractional eigenstructure of a Hermitian Laplacian: the basis P = U^α, the
/// fractional eigenvalues ξ_ℓ = v_ℓ^α, and the parameters that produced them.
#[derive(Clone, Debug)]
pub struct FractionalSpectrum<T> {
    pub p: CMat<T>,
    pub xi: Vec<T>,
    pub alpha: T,
    pub q: T,
    pub base: HermitianSpectrum<T>,
}

impl<T: Real> FractionalSpectrum<T> {
    pub fn n(&self) -> usize {
        self.p.n_rows()
    }
}

/// Symmetrized weight matrix and degree diagonal: Ws[i][j] = (w_ij + w_ji)/2,
/// Ds[i] = Σ_j Ws[i][j].
pub fn symmetrize<T: Real>(g: &DiGraph<T>) -> (Vec<Vec<T>>, Vec<T>) {
    let n = g.n();
    let half = T::of(0.5);
    let ws: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| (g.weight(i, j) + g.weight(j, i)) * half).collect())
        .collect();
    let ds = ws.iter().map(|row| row.iter().copied().fold(T::zero(), |a, b| a + b)).collect();
    (ws, ds)
}

/// The phase matrix Γ_q with entries e^{2πiq(w_ij − w_ji)}; Hermitian with
/// unit modulus everywhere (entries are 1 wherever both directions agree,
/// including all non-edges).
pub fn gamma<T: Real>(g: &DiGraph<T>, q: T) -> Result<CMat<T>> {
    check_q(q)?;
    let n = g.n();
    let two_pi_q = T::of(2.0 * std::f64::consts::PI) * q;
    Ok(CMat::from_fn(n, n, |i, j| {
        Complex::from_polar(T::one(), two_pi_q * (g.weight(i, j) - g.weight(j, i)))
    }))
}

/// Assemble L = D_s − Γ_q ⊙ W_s.
pub fn hermitian_laplacian<T: Real>(g: &DiGraph<T>, q: T) -> Result<HermitianLaplacian<T>> {
    let gam = gamma(g, q)?;
    let (ws, ds) = symmetrize(g);
    let n = g.n();
    let mut l = CMat::from_fn(n, n, |i, j| gam[(i, j)] * Complex::new(-ws[i][j], T::zero()));
    for i in 0..n {
        // Γ(i,i) = 1 and Ws[i][i] = 0 for loop-free graphs, so the diagonal is Ds.
        l[(i, i)] = l[(i, i)] + Complex::new(ds[i], T::zero());
    }
    Ok(HermitianLaplacian { l, q, ws, ds })
}

/// Eigendecompose the Laplacian and raise it to fractional order α:
/// P = U^α, ξ = v^α. α = 1 short-circuits to the plain spectrum.
pub fn fractional_spectrum<T: Real>(hl: &HermitianLaplacian<T>, alpha: T) -> Result<FractionalSpectrum<T>> {
    let base = eigen::eig_hermitian(&hl.l)?;
    fractional_spectrum_from_base(base, alpha, hl.q)
}

/// Same as [`fractional_spectrum`], reusing an already-computed base
/// eigendecomposition (the expensive step when sweeping over α).
pub fn fractional_spectrum_from_base<T: Real>(
    base: HermitianSpectrum<T>,
    alpha: T,
    q: T,
) -> Result<FractionalSpectrum<T>> {
    if !(alpha > T::zero() && alpha <= T::one()) {
        return Err(DgspError::InvalidParameter("alpha must lie in (0, 1]".into()));
    }
    check_q(q)?;
    let p = if alpha == T::one() {
        base.vectors.clone()
    } else {
        eigen::unitary_fractional_power(&base.vectors, alpha)?
    };
    let xi = eigen::real_diag_power(&base.values, alpha)?;
    Ok(FractionalSpectrum { p, xi, alpha, q, base })
}

/// Reassemble the fractional Laplacian L_{α,d} = P·diag(ξ)·P^H.
pub fn fractional_laplacian_matrix<T: Real>(fs: &FractionalSpectrum<T>) -> CMat<T> {
    fs.p.conjugate_diag(&fs.xi)
}

fn check_q<T: Real>(q: T) -> Result<()> {
    if q >= T::zero() && q < T::one() {
        Ok(())
    } else {
        Err(DgspError::InvalidParameter("q must lie in [0, 1)".into()))
    }
}
