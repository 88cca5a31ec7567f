//! Geometric series inversion with certified error bounds.
//!
//! For a contraction x (norm below one) the series sum_k x^k converges to
//! (1 - x)^(-1) and the partial sum through degree n misses the limit by at
//! most ||x||^(n+1) / (1 - ||x||). The same certificate transfers to a
//! perturbed inversion (S - T)^(-1) through the factorisation
//! S (1 - S^(-1) T), which yields three a priori bounds:
//!
//! ```text
//! ||(S - T)^(-1)||                                `= b1` <= ||S^(-1)|| / (1 - q)
//! ||(S - T)^(-1) - S^(-1)||                       `= b2` <= ||S^(-1)||^2 ||T|| / (1 - q)
//! ||(S - T)^(-1) - S^(-1) - S^(-1) T S^(-1)||     `= b3` <= ||S^(-1)||^3 ||T||^2 / (1 - q)
//! ```
//!
//! with q = ||S^(-1)|| * ||T|| < 1.

use crate::error::{Error, Result};
use crate::matrix::MatrixOperator;

/// Condition estimates at or above this value are treated as numerically
/// singular.
const CONDITION_LIMIT: f64 = 1e12;

/// The three a priori bounds produced by the series certificate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NeumannBounds {
    /// Bound on the norm of the inverse itself.
    pub inverse_norm: f64,
    /// Bound on the distance between the inverse and its zeroth order
    /// approximation.
    pub first_order: f64,
    /// Bound on the distance between the inverse and its first order
    /// approximation.
    pub second_order: f64,
}

/// Outcome of a certified series inversion.
#[derive(Clone, Debug)]
pub struct NeumannResult {
    /// Partial sum approximating the inverse.
    pub inverse_approx: MatrixOperator,
    pub bound_inverse_norm: f64,
    pub bound_first_order: f64,
    pub bound_second_order: f64,
    /// Number of series terms that were accumulated.
    pub terms_used: usize,
    /// Certified bound on the truncation error of `inverse_approx`.
    pub truncation_tail_bound: f64,
}

/// Evaluates the three bounds for given ||a^(-1)|| and ||x||.
///
/// Fails unless norm_a_inv > 0, norm_x >= 0 and the contraction factor
/// norm_a_inv * norm_x stays below one.
pub fn neumann_bounds(norm_a_inv: f64, norm_x: f64) -> Result<NeumannBounds> {
    if !(norm_a_inv > 0.0) || !norm_a_inv.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "norm_a_inv must be positive and finite, got {norm_a_inv}"
        )));
    }
    if !(norm_x >= 0.0) || !norm_x.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "norm_x must be nonnegative and finite, got {norm_x}"
        )));
    }
    let q = norm_a_inv * norm_x;
    if q >= 1.0 {
        return Err(Error::ContractionViolation { factor: q });
    }
    let denom = 1.0 - q;
    Ok(NeumannBounds {
        inverse_norm: norm_a_inv / denom,
        first_order: norm_a_inv * norm_a_inv * norm_x / denom,
        second_order: norm_a_inv * norm_a_inv * norm_a_inv * norm_x * norm_x / denom,
    })
}

/// Smallest n >= 0 such that q^(n+1) * head <= target, assuming 0 <= q < 1.
fn terms_for_tail(q: f64, head: f64, target: f64) -> usize {
    let mut tail = q * head;
    let mut n = 0usize;
    while tail > target {
        tail *= q;
        n += 1;
    }
    n
}

/// q^(n+1) * head for the chosen degree n.
fn tail_value(q: f64, head: f64, n: usize) -> f64 {
    q.powi(n as i32 + 1) * head
}

/// Approximates (1 - x)^(-1) by the partial series sum, with the degree
/// chosen so that the certified truncation bound drops to `tol`.
pub fn invert_near_identity(x: &MatrixOperator, tol: f64) -> Result<NeumannResult> {
    if !x.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "series inversion requires a square matrix, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let norm_x = x.operator_norm()?;
    if norm_x >= 1.0 {
        return Err(Error::ContractionViolation { factor: norm_x });
    }
    let bounds = neumann_bounds(1.0, norm_x)?;
    // Tail of the plain geometric series: ||x||^(n+1) / (1 - ||x||).
    let degree = terms_for_tail(norm_x, 1.0 / (1.0 - norm_x), tol);
    let n = x.rows();
    let mut sum = MatrixOperator::identity(n, x.domain_norm());
    let mut power = x.clone();
    for k in 1..=degree {
        sum = sum.add(&power)?;
        if k < degree {
            power = power.mul(x)?;
        }
    }
    Ok(NeumannResult {
        inverse_approx: sum,
        bound_inverse_norm: bounds.inverse_norm,
        bound_first_order: bounds.first_order,
        bound_second_order: bounds.second_order,
        terms_used: degree + 1,
        truncation_tail_bound: tail_value(norm_x, 1.0 / (1.0 - norm_x), degree),
    })
}

/// Approximates (S - T)^(-1) for an invertible S and a perturbation T with
/// ||T|| < ||S^(-1)||^(-1), via the series in x = S^(-1) T applied to
/// S^(-1). The degree is raised until both the truncation bound and the
/// certified residual bound ||(S - T) * approx - 1|| <= tol * ||S - T||
/// hold.
pub fn invert_perturbed(
    s: &MatrixOperator,
    t: &MatrixOperator,
    tol: f64,
) -> Result<NeumannResult> {
    if !s.is_square() || s.rows() != t.rows() || s.cols() != t.cols() {
        return Err(Error::DimensionMismatch(format!(
            "expected matching square matrices, got {}x{} and {}x{}",
            s.rows(),
            s.cols(),
            t.rows(),
            t.cols()
        )));
    }
    if s.domain_norm() != t.domain_norm() || s.codomain_norm() != t.codomain_norm() {
        return Err(Error::UnsupportedNorm {
            domain: t.domain_norm(),
            codomain: t.codomain_norm(),
        });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let s_inv = s.eliminate_inverse()?;
    let norm_s = s.operator_norm()?;
    let norm_s_inv = s_inv.operator_norm()?;
    let cond = norm_s * norm_s_inv;
    if !cond.is_finite() || cond >= CONDITION_LIMIT {
        return Err(Error::SingularMatrix { cond });
    }
    let norm_t = t.operator_norm()?;
    let q = norm_s_inv * norm_t;
    if q >= 1.0 {
        return Err(Error::ContractionViolation { factor: q });
    }
    let bounds = neumann_bounds(norm_s_inv, norm_t)?;
    let norm_diff = s.sub(t)?.operator_norm()?;
    // Two stopping targets: the truncation error of the assembled inverse,
    // bounded by q^(n+1)/(1-q) * ||S^(-1)||, and the identity residual,
    // bounded by cond(S) * q^(n+1) and required under tol * ||S - T||.
    let degree_tail = terms_for_tail(q, norm_s_inv / (1.0 - q), tol);
    let degree_residual = if q == 0.0 {
        0
    } else {
        terms_for_tail(q, cond / q, tol * norm_diff)
    };
    let degree = degree_tail.max(degree_residual);

    let x = s_inv.mul(t)?;
    let n = s.rows();
    let mut sum = MatrixOperator::identity(n, x.domain_norm());
    let mut power = x.clone();
    for k in 1..=degree {
        sum = sum.add(&power)?;
        if k < degree {
            power = power.mul(&x)?;
        }
    }
    let inverse_approx = sum.mul(&s_inv)?;
    Ok(NeumannResult {
        inverse_approx,
        bound_inverse_norm: bounds.inverse_norm,
        bound_first_order: bounds.first_order,
        bound_second_order: bounds.second_order,
        terms_used: degree + 1,
        truncation_tail_bound: tail_value(q, norm_s_inv / (1.0 - q), degree),
    })
}
