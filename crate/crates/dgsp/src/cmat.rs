//! Small dense complex matrix type backing the eigensolver and transforms.
//!
//! Row-major `Vec<Complex<T>>` storage; every graph in scope is a few hundred
//! vertices at most, so dense O(n^2) storage and O(n^3) products are fine.

use num_complex::Complex;

use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct CMat<T> {
    n_rows: usize,
    n_cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> CMat<T> {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self {
            n_rows,
            n_cols,
            data: vec![Complex::new(T::zero(), T::zero()); n_rows * n_cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(n_rows: usize, n_cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zeros(n_rows, n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n_cols, self.n_rows, |i, j| self[(j, i)].conj())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n_cols, rhs.n_rows, "matrix dimension mismatch");
        let mut out = Self::zeros(self.n_rows, rhs.n_cols);
        for i in 0..self.n_rows {
            for k in 0..self.n_cols {
                let a = self[(i, k)];
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for j in 0..rhs.n_cols {
                    out[(i, j)] = out[(i, j)] + a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(self.n_cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.n_rows)
            .map(|i| {
                let mut acc = Complex::new(T::zero(), T::zero());
                for j in 0..self.n_cols {
                    acc = acc + self[(i, j)] * v[j];
                }
                acc
            })
            .collect()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.n_rows, self.n_cols), (rhs.n_rows, rhs.n_cols));
        Self::from_fn(self.n_rows, self.n_cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), |a, b| if b > a { b } else { a })
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Max modulus over off-diagonal entries (square matrices).
    pub fn off_diagonal_max(&self) -> T {
        let mut m = T::zero();
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                if i != j {
                    let a = self[(i, j)].norm();
                    if a > m {
                        m = a;
                    }
                }
            }
        }
        m
    }

    /// ‖A − A^H‖_max
    pub fn hermitian_defect(&self) -> T {
        let mut m = T::zero();
        for i in 0..self.n_rows {
            for j in i..self.n_cols {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                if d > m {
                    m = d;
                }
            }
        }
        m
    }

    /// ‖A^H A − I‖_max
    pub fn unitarity_defect(&self) -> T {
        self.adjoint().mul(self).sub(&Self::identity(self.n_cols)).max_abs()
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.n_rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, col: &[Complex<T>]) {
        assert_eq!(col.len(), self.n_rows);
        for i in 0..self.n_rows {
            self[(i, j)] = col[i];
        }
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self::from_fn(self.n_rows, self.n_cols, |i, j| self[(i, j)] * s)
    }

    pub fn has_non_finite(&self) -> bool {
        self.data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite())
    }

    /// A · diag(d) · A^H for a real diagonal `d`.
    pub fn conjugate_diag(&self, d: &[T]) -> Self {
        assert!(self.is_square());
        assert_eq!(d.len(), self.n_cols);
        let n = self.n_rows;
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex::new(T::zero(), T::zero());
                for k in 0..n {
                    acc = acc + self[(i, k)] * self[(j, k)].conj() * d[k];
                }
                out[(i, j)] = acc;
            }
        }
        out
    }
}

impl<T> std::ops::Index<(usize, usize)> for CMat<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.n_cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for CMat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.n_cols + j]
    }
}
