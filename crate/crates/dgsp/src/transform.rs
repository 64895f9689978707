//! Forward and inverse fractional transforms over a spectrum, plus spectral
//! convolution.
//!
//! The forward transform projects a vertex-domain signal onto the fractional
//! basis (f̂ = P^H f); the inverse reconstructs (f = P·ĉ). Because P is
//! unitary the pair is an exact round trip and preserves energy (Parseval).

use num_complex::Complex;

use crate::error::{DgspError, Result};
use crate::laplacian::FractionalSpectrum;
use crate::scalar::Real;

/// Spectral coefficients of a signal, tagged with the (α, q) of the spectrum
/// that produced them. Operations refuse to mix coefficients across different
/// fractional domains — combining them silently would be meaningless.
#[derive(Clone, Debug)]
pub struct SpectralCoefficients<T> {
    pub values: Vec<Complex<T>>,
    pub alpha: T,
    pub q: T,
}

impl<T: Real> SpectralCoefficients<T> {
    fn check_provenance(&self, fs: &FractionalSpectrum<T>) -> Result<()> {
        if self.alpha != fs.alpha || self.q != fs.q {
            return Err(DgspError::ProvenanceMismatch {
                got_alpha: self.alpha.to_f64().unwrap_or(f64::NAN),
                got_q: self.q.to_f64().unwrap_or(f64::NAN),
                want_alpha: fs.alpha.to_f64().unwrap_or(f64::NAN),
                want_q: fs.q.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(())
    }
}

/// Forward transform of a complex vertex-domain signal: ĉ = P^H f.
pub fn forward<T: Real>(
    f: &[Complex<T>],
    fs: &FractionalSpectrum<T>,
) -> Result<SpectralCoefficients<T>> {
    if f.len() != fs.n() {
        return Err(DgspError::DimensionMismatch(format!(
            "signal length {} vs spectrum size {}",
            f.len(),
            fs.n()
        )));
    }
    let values = fs.p.adjoint().matvec(f);
    Ok(SpectralCoefficients { values, alpha: fs.alpha, q: fs.q })
}

/// Forward transform of a real signal.
pub fn forward_real<T: Real>(
    f: &[T],
    fs: &FractionalSpectrum<T>,
) -> Result<SpectralCoefficients<T>> {
    let complex: Vec<Complex<T>> = f.iter().map(|&x| Complex::new(x, T::zero())).collect();
    forward(&complex, fs)
}

/// Inverse transform: f = P·ĉ. Rejects coefficients from a different (α, q).
pub fn inverse<T: Real>(
    c: &SpectralCoefficients<T>,
    fs: &FractionalSpectrum<T>,
) -> Result<Vec<Complex<T>>> {
    c.check_provenance(fs)?;
    if c.values.len() != fs.n() {
        return Err(DgspError::DimensionMismatch(format!(
            "coefficient length {} vs spectrum size {}",
            c.values.len(),
            fs.n()
        )));
    }
    Ok(fs.p.matvec(&c.values))
}

/// Spectral convolution: transform both inputs, multiply coefficientwise, and
/// reconstruct. Commutative by construction.
pub fn convolve<T: Real>(
    f: &[Complex<T>],
    g: &[Complex<T>],
    fs: &FractionalSpectrum<T>,
) -> Result<Vec<Complex<T>>> {
    let fc = forward(f, fs)?;
    let gc = forward(g, fs)?;
    let product = SpectralCoefficients {
        values: fc.values.iter().zip(&gc.values).map(|(&a, &b)| a * b).collect(),
        alpha: fs.alpha,
        q: fs.q,
    };
    inverse(&product, fs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::DiGraph;
    use crate::laplacian::{fractional_spectrum, hermitian_laplacian};

    fn spectrum() -> FractionalSpectrum<f64> {
        let g = DiGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)]).unwrap();
        let hl = hermitian_laplacian(&g, 0.25).unwrap();
        fractional_spectrum(&hl, 0.8).unwrap()
    }

    #[test]
    fn basis_vector_maps_to_unit_coefficient() {
        let fs = spectrum();
        let p0 = fs.p.column(0);
        let c = forward(&p0, &fs).unwrap();
        assert!((c.values[0] - Complex::new(1.0, 0.0)).norm() < 1e-9);
        assert!(c.values[1].norm() < 1e-9 && c.values[2].norm() < 1e-9);
    }

    #[test]
    fn round_trip() {
        let fs = spectrum();
        let f = vec![
            Complex::new(1.0, -0.5),
            Complex::new(0.25, 2.0),
            Complex::new(-3.0, 0.1),
        ];
        let back = inverse(&forward(&f, &fs).unwrap(), &fs).unwrap();
        for (a, b) in f.iter().zip(&back) {
            assert!((a - b).norm() < 1e-9);
        }
    }

    #[test]
    fn provenance_is_enforced() {
        let fs = spectrum();
        let mut c = forward_real(&[1.0, 0.0, 0.0], &fs).unwrap();
        c.alpha = 0.5;
        assert!(inverse(&c, &fs).is_err());
    }
}
