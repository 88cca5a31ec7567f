//! The left shift (S x)_n = x_(n+1) on finitely supported sequences.
//!
//! Vectors stand for sequences that vanish beyond their stored length, so
//! every series below is a finite sum and exact up to rounding. On the full
//! space the spectrum of S is the closed unit disk; restricted to the
//! subspace F = {x_0 = 0} the shift acts as an onto isometry whose
//! spectral picture is entirely different.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::graph::Normed;
use crate::types::SpectrumStatus;

/// Length of truncated eigenvector witnesses emitted by the classifier.
pub const WITNESS_LEN: usize = 64;

/// A finitely supported sequence with its norm exponent.
#[derive(Clone, Debug, PartialEq)]
pub struct SeqVector {
    values: Vec<Complex64>,
    exponent: Exponent,
}

impl SeqVector {
    pub fn new(values: Vec<Complex64>, exponent: Exponent) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument(
                "a sequence vector needs at least one entry".into(),
            ));
        }
        if values.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidArgument(
                "sequence entries must be finite".into(),
            ));
        }
        Ok(SeqVector { values, exponent })
    }

    /// The first unit vector e_0 = (1).
    pub fn basis0(exponent: Exponent) -> Self {
        SeqVector {
            values: vec![Complex64::new(1.0, 0.0)],
            exponent,
        }
    }

    /// Truncated geometric sequence (1, r, r^2, ...) of the given length,
    /// built by successive multiplication.
    pub fn geometric(ratio: Complex64, len: usize, exponent: Exponent) -> Result<Self> {
        if len == 0 {
            return Err(Error::InvalidArgument(
                "a sequence vector needs at least one entry".into(),
            ));
        }
        let mut values = Vec::with_capacity(len);
        let mut v = Complex64::new(1.0, 0.0);
        for _ in 0..len {
            values.push(v);
            v *= ratio;
        }
        SeqVector::new(values, exponent)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value(&self, n: usize) -> Complex64 {
        self.values[n]
    }

    pub fn exponent(&self) -> Exponent {
        self.exponent
    }

    pub fn scale(&self, factor: Complex64) -> SeqVector {
        SeqVector {
            values: self.values.iter().map(|&z| z * factor).collect(),
            exponent: self.exponent,
        }
    }

    /// The p-norm of the stored entries (trailing zeros contribute nothing).
    pub fn norm(&self) -> f64 {
        lp_norm(self)
    }
}

/// The p-norm of a finitely supported sequence, scaled by the largest
/// entry so that large exponents do not overflow.
pub fn lp_norm(x: &SeqVector) -> f64 {
    let m = x.values.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
    if m == 0.0 {
        return 0.0;
    }
    let p = x.exponent;
    if p.is_infinite() {
        return m;
    }
    let q = p.value();
    let mut sum = 0.0f64;
    if q == 1.0 {
        for z in &x.values {
            sum += z.norm() / m;
        }
        m * sum
    } else if q == 2.0 {
        for z in &x.values {
            let r = z.norm() / m;
            sum += r * r;
        }
        m * sum.sqrt()
    } else {
        for z in &x.values {
            sum += (z.norm() / m).powf(q);
        }
        m * sum.powf(1.0 / q)
    }
}

/// Drops the leading entry: (S x)_n = x_(n+1). Applied to a single entry
/// the result is the zero sequence of length one.
pub fn shift_apply(x: &SeqVector) -> SeqVector {
    if x.values.len() == 1 {
        return SeqVector {
            values: vec![Complex64::new(0.0, 0.0)],
            exponent: x.exponent,
        };
    }
    SeqVector {
        values: x.values[1..].to_vec(),
        exponent: x.exponent,
    }
}

/// Prepends an entry, a right inverse of the shift:
/// shift_apply(shift_section(y, k)) = y.
pub fn shift_section(y: &SeqVector, entry: Complex64) -> SeqVector {
    let mut values = Vec::with_capacity(y.values.len() + 1);
    values.push(entry);
    values.extend_from_slice(&y.values);
    SeqVector {
        values,
        exponent: y.exponent,
    }
}

/// Solves zeta y - S y = x for |zeta| > 1 by the backward recurrence
/// y_n = (x_n + y_(n+1)) / zeta with y_N = 0, which sums the geometric
/// resolvent series exactly under the truncation convention. The residual
/// is re-checked against max(tol, 1e-12) relative to the input norm.
pub fn resolvent_shift(zeta: Complex64, x: &SeqVector, tol: f64) -> Result<SeqVector> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if zeta.norm() <= 1.0 {
        return Err(Error::ShiftSpectral {
            modulus: zeta.norm(),
        });
    }
    let n = x.values.len();
    let mut y = vec![Complex64::new(0.0, 0.0); n];
    let mut next = Complex64::new(0.0, 0.0);
    for k in (0..n).rev() {
        let v = (x.values[k] + next) / zeta;
        y[k] = v;
        next = v;
    }
    let y = SeqVector {
        values: y,
        exponent: x.exponent,
    };
    let limit = tol.max(1e-12) * lp_norm(x);
    let defect = residual(zeta, &y, x);
    if defect > limit {
        return Err(Error::InvalidArgument(format!(
            "resolvent residual {defect:.3e} exceeded its certificate {limit:.3e}"
        )));
    }
    Ok(y)
}

/// ||zeta y - S y - x|| with the shift of y padded by zero at the end.
fn residual(zeta: Complex64, y: &SeqVector, x: &SeqVector) -> f64 {
    let n = y.values.len().max(x.values.len());
    let at = |v: &[Complex64], k: usize| {
        v.get(k).copied().unwrap_or(Complex64::new(0.0, 0.0))
    };
    let values: Vec<Complex64> = (0..n)
        .map(|k| zeta * at(&y.values, k) - at(&y.values, k + 1) - at(&x.values, k))
        .collect();
    lp_norm(&SeqVector {
        values,
        exponent: x.exponent,
    })
}

/// A classified point with an optional witness vector and a short reason.
#[derive(Clone, Debug)]
pub struct SpectralClassification {
    pub status: SpectrumStatus,
    pub witness: Option<SeqVector>,
    pub note: String,
}

/// Classifies zeta against the spectrum of the full shift: the closed unit
/// disk. Interior points other than zero come with a truncated eigenvector
/// witness, zero with a kernel witness; boundary points carry no finite
/// witness.
pub fn classify_shift(zeta: Complex64) -> SpectralClassification {
    let modulus = zeta.norm();
    if modulus > 1.0 {
        return SpectralClassification {
            status: SpectrumStatus::Resolved,
            witness: None,
            note: "resolved by the geometric series".into(),
        };
    }
    if modulus == 0.0 {
        return SpectralClassification {
            status: SpectrumStatus::Spectral,
            witness: Some(SeqVector::basis0(Exponent::TWO)),
            note: "not one-one".into(),
        };
    }
    if modulus < 1.0 {
        let witness = SeqVector::geometric(zeta, WITNESS_LEN, Exponent::TWO)
            .expect("witness length is positive");
        return SpectralClassification {
            status: SpectrumStatus::Spectral,
            witness: Some(witness),
            note: "eigenvector witness".into(),
        };
    }
    SpectralClassification {
        status: SpectrumStatus::Spectral,
        witness: None,
        note: "boundary, spectrum closed".into(),
    }
}

/// Classifies zeta for the shift restricted to F = {x_0 = 0}, where it is
/// an onto isometry: zero is resolved, everything outside the closed disk
/// is spectral (e_0 has no preimage inside F), and the punctured closed
/// disk is left unclassified.
pub fn classify_restricted(zeta: Complex64) -> SpectralClassification {
    let modulus = zeta.norm();
    if modulus == 0.0 {
        return SpectralClassification {
            status: SpectrumStatus::Resolved,
            witness: None,
            note: "resolvent is the negated section map".into(),
        };
    }
    if modulus > 1.0 {
        return SpectralClassification {
            status: SpectrumStatus::Spectral,
            witness: Some(SeqVector::basis0(Exponent::TWO)),
            note: "unique candidate preimage has x0 = 1/zeta, outside F".into(),
        };
    }
    SpectralClassification {
        status: SpectrumStatus::Indeterminate,
        witness: None,
        note: "not classified on the punctured closed disk".into(),
    }
}

/// The resolvent of the restricted shift at zero: y maps to
/// (0, -y_0, -y_1, ...), the negated section, which lands in F and
/// satisfies -S x = y.
pub fn restricted_resolvent_at_zero(y: &SeqVector) -> SeqVector {
    shift_section(&y.scale(Complex64::new(-1.0, 0.0)), Complex64::new(0.0, 0.0))
}

impl Normed for SeqVector {
    fn norm(&self) -> f64 {
        lp_norm(self)
    }

    /// Difference under the truncation convention: the shorter vector is
    /// padded with zeros.
    fn sub(&self, other: &Self) -> Self {
        let n = self.values.len().max(other.values.len());
        let at = |v: &[Complex64], k: usize| {
            v.get(k).copied().unwrap_or(Complex64::new(0.0, 0.0))
        };
        SeqVector {
            values: (0..n)
                .map(|k| at(&self.values, k) - at(&other.values, k))
                .collect(),
            exponent: self.exponent,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn lp_norm_of_dyadic_sequence() {
        let values: Vec<Complex64> = (0..30).map(|n| c(0.5f64.powi(n))).collect();
        let x = SeqVector::new(values.clone(), Exponent::ONE).unwrap();
        // Finite geometric sum: 2 - 2^(-29).
        assert!((lp_norm(&x) - (2.0 - 0.5f64.powi(29))).abs() <= 1e-15);
        let x = SeqVector::new(values, Exponent::INF).unwrap();
        assert_eq!(lp_norm(&x), 1.0);
    }

    #[test]
    fn section_is_a_right_inverse() {
        let y = SeqVector::new(vec![c(1.0), c(2.0), c(3.0)], Exponent::TWO).unwrap();
        let x = shift_section(&y, c(7.0));
        assert_eq!(x.len(), 4);
        assert_eq!(shift_apply(&x), y);
    }

    #[test]
    fn shift_of_singleton_is_zero() {
        let x = SeqVector::new(vec![c(5.0)], Exponent::TWO).unwrap();
        let s = shift_apply(&x);
        assert_eq!(s.values(), &[c(0.0)]);
    }

    #[test]
    fn resolvent_matches_finite_geometric_sums() {
        let x = SeqVector::new(vec![c(1.0); 20], Exponent::INF).unwrap();
        let y = resolvent_shift(c(2.0), &x, 1e-12).unwrap();
        // y_n = sum_(k=0)^(19-n) 2^(-k-1) = 1 - 2^(n-20).
        for n in 0..20 {
            let expect = 1.0 - 2.0f64.powi(n as i32 - 20);
            assert!(
                (y.value(n) - c(expect)).norm() <= 1e-15,
                "entry {n}: {} vs {expect}",
                y.value(n)
            );
        }
    }

    #[test]
    fn resolvent_rejects_the_disk() {
        let x = SeqVector::basis0(Exponent::TWO);
        assert!(matches!(
            resolvent_shift(c(0.5), &x, 1e-12),
            Err(Error::ShiftSpectral { .. })
        ));
        assert!(matches!(
            resolvent_shift(c(1.0), &x, 1e-12),
            Err(Error::ShiftSpectral { .. })
        ));
    }

    #[test]
    fn eigenvector_witness_has_tiny_defect() {
        let cls = classify_shift(c(0.5));
        assert_eq!(cls.status, SpectrumStatus::Spectral);
        let x = cls.witness.unwrap();
        let defect = shift_apply(&x).sub(&x.scale(c(0.5))).norm();
        assert!(
            defect <= 0.5f64.powi(WITNESS_LEN as i32),
            "defect = {defect:e}"
        );
    }

    #[test]
    fn classification_covers_the_plane() {
        assert_eq!(classify_shift(c(0.0)).status, SpectrumStatus::Spectral);
        assert_eq!(
            classify_shift(Complex64::new(0.6, 0.8)).status,
            SpectrumStatus::Spectral
        );
        assert_eq!(classify_shift(c(2.0)).status, SpectrumStatus::Resolved);
        assert!(classify_shift(c(2.0)).witness.is_none());
    }

    #[test]
    fn restricted_classification_and_resolvent_at_zero() {
        assert_eq!(classify_restricted(c(0.0)).status, SpectrumStatus::Resolved);
        let spectral = classify_restricted(c(2.0));
        assert_eq!(spectral.status, SpectrumStatus::Spectral);
        assert_eq!(spectral.witness.unwrap().values(), &[c(1.0)]);
        assert_eq!(
            classify_restricted(c(0.5)).status,
            SpectrumStatus::Indeterminate
        );

        let y = SeqVector::new(vec![c(1.0), c(2.0), c(3.0)], Exponent::ONE).unwrap();
        let x = restricted_resolvent_at_zero(&y);
        assert_eq!(x.values(), &[c(0.0), c(-1.0), c(-2.0), c(-3.0)]);
        // -S x = y.
        let minus_sx = shift_apply(&x).scale(c(-1.0));
        assert_eq!(minus_sx.values(), y.values());
    }
}
