//! Norm exponents p in [1, infinity].

use crate::error::{Error, Result};

/// A sequence/graph norm exponent p with 1 <= p <= infinity.
///
/// The value is stored as a plain `f64`; `f64::INFINITY` selects the
/// supremum norm. Construction rejects NaN and anything below one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Exponent(f64);

impl Exponent {
    pub const ONE: Exponent = Exponent(1.0);
    pub const TWO: Exponent = Exponent(2.0);
    pub const INF: Exponent = Exponent(f64::INFINITY);

    pub fn new(p: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidExponent(p));
        }
        Ok(Exponent(p))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }
}

impl std::fmt::Display for Exponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Combines two nonnegative magnitudes into (a^p + b^p)^(1/p), with the
/// max for p = infinity. Scaled by the larger entry so that large p does
/// not overflow.
pub(crate) fn p_combine(a: f64, b: f64, p: Exponent) -> f64 {
    debug_assert!(a >= 0.0 && b >= 0.0);
    let m = a.max(b);
    if m == 0.0 {
        return 0.0;
    }
    if p.is_infinite() {
        return m;
    }
    let q = p.value();
    if q == 1.0 {
        return a + b;
    }
    m * ((a / m).powf(q) + (b / m).powf(q)).powf(1.0 / q)
}
