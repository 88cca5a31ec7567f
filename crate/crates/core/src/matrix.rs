//! Dense complex matrices acting between finite dimensional normed spaces.
//!
//! A matrix is stored together with the norm exponents of its domain and
//! codomain. Induced operator norms are available for the matching pairs
//! (1,1), (2,2) and (inf,inf):
//!
//! ```text
//! p = 1    largest column sum of absolute values
//! p = inf  largest row sum of absolute values
//! p = 2    largest singular value (power iteration on A^H A)
//! ```

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative tolerance on the dominant eigenvalue estimate of A^H A.
const POWER_REL_TOL: f64 = 1e-10;
/// Iteration cap for the singular value power method.
const POWER_MAX_ITERS: usize = 10_000;

/// Norm exponent attached to a matrix domain or codomain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormKind {
    One,
    Two,
    Inf,
}

/// Dense row-major complex matrix with declared domain/codomain norms.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixOperator {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
    domain_norm: NormKind,
    codomain_norm: NormKind,
}

impl MatrixOperator {
    /// Builds a matrix from row-major data. All entries must be finite and
    /// both dimensions must be at least one.
    pub fn new(
        rows: usize,
        cols: usize,
        data: Vec<Complex64>,
        domain_norm: NormKind,
        codomain_norm: NormKind,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidArgument(
                "matrix entries must be finite".into(),
            ));
        }
        Ok(MatrixOperator {
            rows,
            cols,
            data,
            domain_norm,
            codomain_norm,
        })
    }

    /// Builds a square matrix from nested rows.
    pub fn from_rows(rows: &[Vec<Complex64>], norm: NormKind) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data: Vec<Complex64> = rows.iter().flatten().copied().collect();
        MatrixOperator::new(r, c, data, norm, norm)
    }

    /// The n-by-n identity with the same exponent on both sides.
    pub fn identity(n: usize, norm: NormKind) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        MatrixOperator {
            rows: n,
            cols: n,
            data,
            domain_norm: norm,
            codomain_norm: norm,
        }
    }

    pub fn zeros(rows: usize, cols: usize, norm: NormKind) -> Self {
        MatrixOperator {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
            domain_norm: norm,
            codomain_norm: norm,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn domain_norm(&self) -> NormKind {
        self.domain_norm
    }

    pub fn codomain_norm(&self) -> NormKind {
        self.codomain_norm
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Matrix product self * rhs. Norm kinds are inherited from the factors:
    /// domain from `rhs`, codomain from `self`.
    pub fn mul(&self, rhs: &MatrixOperator) -> Result<MatrixOperator> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.data[i * self.cols + k];
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[i * rhs.cols + j] += aik * rhs.data[k * rhs.cols + j];
                }
            }
        }
        Ok(MatrixOperator {
            rows: self.rows,
            cols: rhs.cols,
            data: out,
            domain_norm: rhs.domain_norm,
            codomain_norm: self.codomain_norm,
        })
    }

    pub fn add(&self, rhs: &MatrixOperator) -> Result<MatrixOperator> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &MatrixOperator) -> Result<MatrixOperator> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &MatrixOperator,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<MatrixOperator> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot combine {}x{} with {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(MatrixOperator {
            rows: self.rows,
            cols: self.cols,
            data,
            domain_norm: self.domain_norm,
            codomain_norm: self.codomain_norm,
        })
    }

    pub fn scale(&self, factor: Complex64) -> MatrixOperator {
        MatrixOperator {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * factor).collect(),
            domain_norm: self.domain_norm,
            codomain_norm: self.codomain_norm,
        }
    }

    /// Matrix-vector product A v.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols, "vector length must match matrix width");
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..self.cols {
                acc += self.data[i * self.cols + j] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Hermitian transpose product A^H w.
    fn herm_apply(&self, w: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(w.len(), self.rows, "vector length must match matrix height");
        let mut out = vec![Complex64::new(0.0, 0.0); self.cols];
        for i in 0..self.rows {
            let wi = w[i];
            for j in 0..self.cols {
                out[j] += self.data[i * self.cols + j].conj() * wi;
            }
        }
        out
    }

    /// Induced operator norm for the declared exponents. Only the matching
    /// pairs (1,1), (2,2) and (inf,inf) are supported.
    pub fn operator_norm(&self) -> Result<f64> {
        if self.domain_norm != self.codomain_norm {
            return Err(Error::UnsupportedNorm {
                domain: self.domain_norm,
                codomain: self.codomain_norm,
            });
        }
        Ok(match self.domain_norm {
            NormKind::One => self.max_column_sum(),
            NormKind::Inf => self.max_row_sum(),
            NormKind::Two => self.largest_singular_value(),
        })
    }

    fn max_column_sum(&self) -> f64 {
        let mut best = 0.0f64;
        for j in 0..self.cols {
            let mut sum = 0.0;
            for i in 0..self.rows {
                sum += self.data[i * self.cols + j].norm();
            }
            best = best.max(sum);
        }
        best
    }

    fn max_row_sum(&self) -> f64 {
        let mut best = 0.0f64;
        for i in 0..self.rows {
            let mut sum = 0.0;
            for j in 0..self.cols {
                sum += self.data[i * self.cols + j].norm();
            }
            best = best.max(sum);
        }
        best
    }

    /// Power iteration on A^H A with a deterministic all-ones start vector.
    ///
    /// If that start happens to lie in the kernel of A^H A the iteration is
    /// restarted from each standard basis vector; the dominant eigenvector
    /// has a nonzero component along at least one of them, so the maximum
    /// over restarts recovers the dominant singular value.
    fn largest_singular_value(&self) -> f64 {
        let ones = vec![Complex64::new(1.0, 0.0); self.cols];
        if let Some(sigma) = self.power_iterate(ones) {
            return sigma;
        }
        let mut best = 0.0f64;
        for j in 0..self.cols {
            let mut start = vec![Complex64::new(0.0, 0.0); self.cols];
            start[j] = Complex64::new(1.0, 0.0);
            if let Some(sigma) = self.power_iterate(start) {
                best = best.max(sigma);
            }
        }
        best
    }

    /// Runs the power method from `start`; returns None when the start
    /// vector is annihilated immediately (it lies in the kernel of A^H A).
    fn power_iterate(&self, start: Vec<Complex64>) -> Option<f64> {
        let mut v = start;
        let vn = l2(&v);
        if vn == 0.0 {
            return None;
        }
        for x in v.iter_mut() {
            *x /= vn;
        }
        let mut lambda_prev = f64::NAN;
        for _ in 0..POWER_MAX_ITERS {
            let w = self.apply(&v);
            // With ||v|| = 1 this Rayleigh quotient is v^H (A^H A) v.
            let lambda = l2_sq(&w);
            if lambda == 0.0 {
                return if lambda_prev.is_nan() {
                    None
                } else {
                    Some(lambda_prev.sqrt())
                };
            }
            if !lambda_prev.is_nan() && (lambda - lambda_prev).abs() <= POWER_REL_TOL * lambda {
                return Some(lambda.sqrt());
            }
            lambda_prev = lambda;
            let z = self.herm_apply(&w);
            let zn = l2(&z);
            if zn == 0.0 {
                return Some(lambda.sqrt());
            }
            for x in z.iter().zip(v.iter_mut()) {
                *x.1 = *x.0 / zn;
            }
        }
        Some(lambda_prev.sqrt())
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting. The norm
    /// kinds of the result are swapped relative to `self` (the inverse maps
    /// the codomain back to the domain).
    pub(crate) fn eliminate_inverse(&self) -> Result<MatrixOperator> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "inverse requires a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let scale = self
            .data
            .iter()
            .map(|z| z.norm())
            .fold(0.0f64, f64::max)
            .max(f64::MIN_POSITIVE);
        let mut a = self.data.clone();
        let mut inv = MatrixOperator::identity(n, self.domain_norm).data;
        for col in 0..n {
            let pivot_row = (col..n)
                .max_by(|&r, &s| {
                    a[r * n + col]
                        .norm()
                        .partial_cmp(&a[s * n + col].norm())
                        .unwrap()
                })
                .unwrap();
            let pivot = a[pivot_row * n + col];
            if pivot.norm() <= scale * 1e-14 {
                return Err(Error::SingularMatrix {
                    cond: f64::INFINITY,
                });
            }
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                    inv.swap(col * n + j, pivot_row * n + j);
                }
            }
            let inv_pivot = Complex64::new(1.0, 0.0) / pivot;
            for j in 0..n {
                a[col * n + j] *= inv_pivot;
                inv[col * n + j] *= inv_pivot;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col];
                if factor == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    let ac = a[col * n + j];
                    let ic = inv[col * n + j];
                    a[r * n + j] -= factor * ac;
                    inv[r * n + j] -= factor * ic;
                }
            }
        }
        Ok(MatrixOperator {
            rows: n,
            cols: n,
            data: inv,
            domain_norm: self.codomain_norm,
            codomain_norm: self.domain_norm,
        })
    }
}

fn l2_sq(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

fn l2(v: &[Complex64]) -> f64 {
    l2_sq(v).sqrt()
}
