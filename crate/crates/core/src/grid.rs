//! Sampled functions on the uniform grid x_j = j/(n-1) over [0, 1].
//!
//! The sup norm of the samples stands in for the continuous sup norm; with
//! smooth integrands every approximation used here converges at order
//! n^(-2), so desk-scale grids (a couple of thousand nodes) are plenty.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Normed;

/// A complex valued function sampled on n >= 2 uniform nodes of [0, 1].
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    samples: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "a grid function needs at least 2 samples, got {}",
                samples.len()
            )));
        }
        if samples.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidArgument(
                "grid samples must be finite".into(),
            ));
        }
        Ok(GridFunction { samples })
    }

    /// Samples `f` on the n-node uniform grid.
    pub fn from_fn(n: usize, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "a grid function needs at least 2 samples, got {n}"
            )));
        }
        let h = 1.0 / (n - 1) as f64;
        GridFunction::new((0..n).map(|j| f(j as f64 * h)).collect())
    }

    pub fn zeros(n: usize) -> Result<Self> {
        GridFunction::new(vec![Complex64::new(0.0, 0.0); n])
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Grid spacing 1/(n-1).
    pub fn h(&self) -> f64 {
        1.0 / (self.samples.len() - 1) as f64
    }

    /// Node position x_j = j/(n-1).
    pub fn node(&self, j: usize) -> f64 {
        j as f64 * self.h()
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn value(&self, j: usize) -> Complex64 {
        self.samples[j]
    }

    pub fn sup_norm(&self) -> f64 {
        self.samples.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn add(&self, rhs: &GridFunction) -> GridFunction {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &GridFunction) -> GridFunction {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn scale(&self, factor: Complex64) -> GridFunction {
        GridFunction {
            samples: self.samples.iter().map(|&z| z * factor).collect(),
        }
    }

    fn zip_with(
        &self,
        rhs: &GridFunction,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> GridFunction {
        assert_eq!(
            self.samples.len(),
            rhs.samples.len(),
            "grid functions must share a grid"
        );
        GridFunction {
            samples: self
                .samples
                .iter()
                .zip(&rhs.samples)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Finite difference derivative: central quotients inside, one sided
    /// second order stencils at both endpoints. Needs n >= 3.
    pub fn derivative(&self) -> Result<GridFunction> {
        let n = self.samples.len();
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "derivative needs at least 3 samples, got {n}"
            )));
        }
        let h = self.h();
        let s = &self.samples;
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        out[0] = (-3.0 * s[0] + 4.0 * s[1] - s[2]) / (2.0 * h);
        for j in 1..n - 1 {
            out[j] = (s[j + 1] - s[j - 1]) / (2.0 * h);
        }
        out[n - 1] = (3.0 * s[n - 1] - 4.0 * s[n - 2] + s[n - 3]) / (2.0 * h);
        Ok(GridFunction { samples: out })
    }
}

impl Normed for GridFunction {
    fn norm(&self) -> f64 {
        self.sup_norm()
    }
    fn sub(&self, other: &Self) -> Self {
        GridFunction::sub(self, other)
    }
}
