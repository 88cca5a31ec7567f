//! Crate wide error type.

use crate::matrix::NormKind;
use thiserror::Error;

/// Errors reported by the operator and scan routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Induced operator norms are only available when domain and codomain
    /// carry the same exponent out of {1, 2, inf}.
    #[error("unsupported norm pair: domain {domain:?}, codomain {codomain:?}")]
    UnsupportedNorm { domain: NormKind, codomain: NormKind },

    /// The contraction factor reached or exceeded one, so the geometric
    /// series certificate does not apply.
    #[error("contraction violation: factor {factor:.6e} is not below 1")]
    ContractionViolation { factor: f64 },

    /// A matrix inverse was requested but the matrix is singular or its
    /// condition estimate is too large to trust.
    #[error("singular or ill-conditioned matrix (condition estimate {cond:.3e})")]
    SingularMatrix { cond: f64 },

    /// Operand shapes do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Norm exponents must satisfy p >= 1 (infinity allowed).
    #[error("invalid exponent {0}: expected a value >= 1 or infinity")]
    InvalidExponent(f64),

    /// The requested point belongs to the spectrum, so no resolvent exists.
    #[error("spectral point: |A(zeta)| = {abs_a:.3e} is within tolerance of zero")]
    SpectralPoint { abs_a: f64 },

    /// The shift resolvent series only converges outside the closed unit disk.
    #[error("spectral for the shift: |zeta| = {modulus:.6e} is not above 1")]
    ShiftSpectral { modulus: f64 },

    /// The supplied function is not in the kernel of the functional, so it
    /// lies outside the domain of the restricted operator.
    #[error("outside functional kernel: |L(f)| = {value:.3e} exceeds {limit:.3e}")]
    OutsideKernel { value: f64, limit: f64 },

    /// A Dirac atom does not sit within half a cell of any grid node.
    #[error("functional atom at t = {t} does not land on the sample grid")]
    GridMismatch { t: f64 },

    /// Closed form bounds exist only for the catalogued example ids.
    #[error("unknown example id {0}: closed form bounds cover ids 2 and 3")]
    UnknownExample(u8),

    /// Catch-all for malformed inputs (empty data, non-finite entries, bad ranges).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Forwarded I/O failure while writing scan outputs.
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
}

/// Convenient result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
