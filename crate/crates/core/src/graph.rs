//! Graph norms for a partial operator and a sequence based closedness probe.
//!
//! For u in the domain of an operator T the graph norm of exponent p is
//!
//! ```text
//! N_p(u) = (||u||^p + ||T u||^p)^(1/p),      N_inf(u) = max(||u||, ||T u||),
//! ```
//!
//! and all of these are equivalent on the domain:
//! N_inf <= N_p <= N_1 <= 2 N_inf.

use crate::error::Result;
use crate::exponent::{p_combine, Exponent};

/// Elements that carry a norm and a difference, enough for the probe to
/// measure convergence.
pub trait Normed {
    fn norm(&self) -> f64;
    fn sub(&self, other: &Self) -> Self;
}

/// A graph norm evaluation together with the ingredients it was built from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GraphNormValue {
    pub u_norm: f64,
    pub tu_norm: f64,
    pub exponent: Exponent,
    pub value: f64,
}

/// Combines ||u|| and ||T u|| into the graph norm of exponent p.
pub fn graph_norm(u_norm: f64, tu_norm: f64, p: Exponent) -> Result<GraphNormValue> {
    if !(u_norm >= 0.0) || !(tu_norm >= 0.0) {
        return Err(crate::error::Error::InvalidArgument(format!(
            "graph norm inputs must be nonnegative, got {u_norm} and {tu_norm}"
        )));
    }
    Ok(GraphNormValue {
        u_norm,
        tu_norm,
        exponent: p,
        value: p_combine(u_norm, tu_norm, p),
    })
}

/// Checks the equivalence chain N_inf <= N_p <= N_1 <= 2 N_inf for one pair
/// of input norms, with a tiny relative slack for rounding.
pub fn norm_sandwich_check(u_norm: f64, tu_norm: f64, p: Exponent) -> Result<bool> {
    let n_inf = graph_norm(u_norm, tu_norm, Exponent::INF)?.value;
    let n_p = graph_norm(u_norm, tu_norm, p)?.value;
    let n_1 = graph_norm(u_norm, tu_norm, Exponent::ONE)?.value;
    let slack = 1.0 + 1e-12;
    Ok(n_inf <= n_p * slack && n_p <= n_1 * slack && n_1 <= 2.0 * n_inf * slack)
}

/// Probe verdicts. `Consistent` supports closedness on the tested data,
/// `Violation` contradicts it, `Inapplicable` means the sequence never
/// converged in graph norm so nothing can be concluded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosednessStatus {
    Consistent,
    Violation,
    Inapplicable,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosednessVerdict {
    pub status: ClosednessStatus,
    /// Index of the sequence element witnessing a violation.
    pub witness_index: Option<usize>,
    /// Distance between T(u_limit) and the proposed image limit.
    pub residual: f64,
}

/// Feeds a sequence u_n -> u with T u_n -> v through the closedness
/// criterion: if both convergences hold (below `tol` by the last index,
/// with a monotone decrease over the final quarter of the sequence) then a
/// closed operator must satisfy T u = v.
pub fn closedness_probe<V: Normed>(
    mut apply_t: impl FnMut(&V) -> Result<V>,
    u_seq: &[V],
    u_limit: &V,
    v_limit: &V,
    tol: f64,
) -> Result<ClosednessVerdict> {
    if u_seq.is_empty() {
        return Err(crate::error::Error::InvalidArgument(
            "closedness probe needs a nonempty sequence".into(),
        ));
    }
    if !(tol > 0.0) {
        return Err(crate::error::Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut u_dist = Vec::with_capacity(u_seq.len());
    let mut v_dist = Vec::with_capacity(u_seq.len());
    for u in u_seq {
        u_dist.push(u.sub(u_limit).norm());
        v_dist.push(apply_t(u)?.sub(v_limit).norm());
    }
    let residual = apply_t(u_limit)?.sub(v_limit).norm();

    let converged = *u_dist.last().unwrap() <= tol
        && *v_dist.last().unwrap() <= tol
        && tail_decreases(&u_dist)
        && tail_decreases(&v_dist);
    if !converged {
        return Ok(ClosednessVerdict {
            status: ClosednessStatus::Inapplicable,
            witness_index: None,
            residual,
        });
    }
    if residual <= tol {
        Ok(ClosednessVerdict {
            status: ClosednessStatus::Consistent,
            witness_index: None,
            residual,
        })
    } else {
        Ok(ClosednessVerdict {
            status: ClosednessStatus::Violation,
            witness_index: Some(u_seq.len() - 1),
            residual,
        })
    }
}

/// True when the final quarter of the sequence is nonincreasing (up to a
/// tiny slack). Guards against declaring convergence from residuals that
/// merely oscillate through small values.
fn tail_decreases(values: &[f64]) -> bool {
    let len = values.len();
    if len < 2 {
        return true;
    }
    let start = (len - (len / 4).max(1)).min(len - 2);
    values[start..]
        .windows(2)
        .all(|w| w[1] <= w[0] + 1e-12 * (1.0 + w[0]))
}
