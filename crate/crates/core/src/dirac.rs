//! Finite combinations of point evaluations on [0, 1].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::GridFunction;

/// A functional f -> sum_k w_k f(t_k) with finitely many atoms t_k in
/// [0, 1]. The empty list is the null functional.
#[derive(Clone, Debug, PartialEq)]
pub struct DiracFunctional {
    atoms: Vec<(f64, Complex64)>,
}

impl DiracFunctional {
    pub fn new(atoms: Vec<(f64, Complex64)>) -> Result<Self> {
        for &(t, w) in &atoms {
            if !t.is_finite() || !(0.0..=1.0).contains(&t) {
                return Err(Error::InvalidArgument(format!(
                    "atom position {t} is outside [0, 1]"
                )));
            }
            if !w.re.is_finite() || !w.im.is_finite() {
                return Err(Error::InvalidArgument(
                    "atom weights must be finite".into(),
                ));
            }
        }
        Ok(DiracFunctional { atoms })
    }

    /// The zero functional.
    pub fn null() -> Self {
        DiracFunctional { atoms: Vec::new() }
    }

    /// Point evaluation at t.
    pub fn delta(t: f64) -> Result<Self> {
        DiracFunctional::new(vec![(t, Complex64::new(1.0, 0.0))])
    }

    /// Difference of two point evaluations, f -> f(a) - f(b).
    pub fn delta_diff(a: f64, b: f64) -> Result<Self> {
        DiracFunctional::new(vec![
            (a, Complex64::new(1.0, 0.0)),
            (b, Complex64::new(-1.0, 0.0)),
        ])
    }

    pub fn atoms(&self) -> &[(f64, Complex64)] {
        &self.atoms
    }

    pub fn is_null(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Applies the functional to a sampled function, reading each atom at
    /// its nearest grid node. An atom farther than half a cell from every
    /// node cannot be represented and is rejected.
    pub fn apply(&self, f: &GridFunction) -> Result<Complex64> {
        let n = f.len();
        let h = f.h();
        let mut acc = Complex64::new(0.0, 0.0);
        for &(t, w) in &self.atoms {
            let j = (t / h).round();
            if j < 0.0 || j > (n - 1) as f64 {
                return Err(Error::GridMismatch { t });
            }
            let j = j as usize;
            if (t - f.node(j)).abs() > 0.5 * h * (1.0 + 1e-9) {
                return Err(Error::GridMismatch { t });
            }
            acc += w * f.value(j);
        }
        Ok(acc)
    }

    /// Applies the functional to x -> exp(zeta x) in closed form, exactly
    /// at the atom positions (no grid involved).
    pub fn apply_exp(&self, zeta: Complex64) -> Complex64 {
        self.atoms
            .iter()
            .map(|&(t, w)| w * (zeta * t).exp())
            .sum()
    }
}
