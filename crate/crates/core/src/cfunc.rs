//! The derivative operator on sampled functions over [0, 1], restricted by
//! a point-evaluation functional.
//!
//! For a functional L the operator acts on the subspace ker L, and for a
//! point zeta the equation zeta u - u' = f is solved by
//!
//! ```text
//! u = gamma * h_zeta - K_zeta f,     gamma = L(K_zeta f) / L(h_zeta),
//! ```
//!
//! where h_zeta(x) = exp(zeta x) spans the homogeneous solutions and
//! K_zeta f(x) = exp(zeta x) * integral_0^x exp(-zeta t) f(t) dt is the
//! particular solution with K_zeta f(0) = 0. The point zeta is spectral
//! exactly when A(zeta) = L(h_zeta) vanishes.

use num_complex::Complex64;

use crate::dirac::DiracFunctional;
use crate::error::{Error, Result};
use crate::grid::GridFunction;

/// Default node count. Chosen congruent to 1 mod 4 so that 0, 1/4, 1/2 and
/// 1 are all grid nodes.
pub const DEFAULT_GRID_N: usize = 2001;

/// Default tolerance below which |A(zeta)| counts as spectral.
pub const DEFAULT_SPECTRAL_TOL: f64 = 1e-9;

/// Upper edge of the near-spectral band: resolving with |A(zeta)| at or
/// below this amplifies rounding too much to trust, so scans report such
/// cells as indeterminate.
pub const NEAR_SPECTRAL_ABS_A: f64 = 1e-6;

/// One resolved point: the coefficients A = L(h_zeta), B = L(K_zeta f),
/// gamma = B / A and the assembled solution.
#[derive(Clone, Debug)]
pub struct ResolveRecord {
    pub zeta: Complex64,
    pub a_value: Complex64,
    pub b_value: Complex64,
    pub gamma: Complex64,
    pub solution: GridFunction,
}

/// Closed form envelope for the resolvent norm of a catalogued example.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormBounds {
    pub lower: f64,
    pub upper: Option<f64>,
}

/// Samples x -> exp(zeta x).
pub fn h_zeta(zeta: Complex64, n: usize) -> Result<GridFunction> {
    GridFunction::from_fn(n, |x| (zeta * x).exp())
}

/// Applies the particular-solution kernel by cumulative trapezoid
/// quadrature on the grid of `f`. Second order accurate for smooth f.
pub fn k_zeta(zeta: Complex64, f: &GridFunction) -> GridFunction {
    let n = f.len();
    let h = f.h();
    let mut out = Vec::with_capacity(n);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut prev = f.value(0);
    out.push(Complex64::new(0.0, 0.0));
    for j in 1..n {
        let x = f.node(j);
        let g = (-zeta * x).exp() * f.value(j);
        acc += 0.5 * h * (prev + g);
        prev = g;
        out.push((zeta * x).exp() * acc);
    }
    GridFunction::new(out).expect("grid size preserved")
}

/// Exact operator norm of the particular-solution kernel on sup-norm
/// functions: (exp(a) - 1)/a with a = Re zeta, extended by continuity to 1
/// at a = 0.
pub fn k_zeta_norm_exact(zeta: Complex64) -> f64 {
    let a = zeta.re;
    if a == 0.0 {
        1.0
    } else {
        a.exp_m1() / a
    }
}

/// Whether zeta belongs to the spectrum: |L(h_zeta)| <= tol.
pub fn spectrum_member(l: &DiracFunctional, zeta: Complex64, tol: f64) -> Result<bool> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(l.apply_exp(zeta).norm() <= tol)
}

/// Solves zeta u - u' = f inside ker L and returns the coefficients along
/// with the solution. Fails when zeta is spectral at `tol` or when f is
/// not in the kernel of L (relative to tol and the size of f).
pub fn resolve_derivative(
    l: &DiracFunctional,
    zeta: Complex64,
    f: &GridFunction,
    tol: f64,
) -> Result<ResolveRecord> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let a_value = l.apply_exp(zeta);
    if a_value.norm() <= tol {
        return Err(Error::SpectralPoint {
            abs_a: a_value.norm(),
        });
    }
    let lf = l.apply(f)?;
    let limit = tol * f.sup_norm();
    if lf.norm() > limit {
        return Err(Error::OutsideKernel {
            value: lf.norm(),
            limit,
        });
    }
    let kf = k_zeta(zeta, f);
    let b_value = l.apply(&kf)?;
    let gamma = b_value / a_value;
    let homogeneous = h_zeta(zeta, f.len())?;
    let solution = homogeneous.scale(gamma).sub(&kf);
    Ok(ResolveRecord {
        zeta,
        a_value,
        b_value,
        gamma,
        solution,
    })
}

/// Largest deviation of zeta u - u' - f over the grid, with u' taken from
/// the finite difference stencils. Grids of u and f must agree.
pub fn residual_ode(zeta: Complex64, u: &GridFunction, f: &GridFunction) -> Result<f64> {
    if u.len() != f.len() {
        return Err(Error::DimensionMismatch(format!(
            "solution has {} samples but right-hand side has {}",
            u.len(),
            f.len()
        )));
    }
    let du = u.derivative()?;
    let mut worst = 0.0f64;
    for j in 0..u.len() {
        let r = (zeta * u.value(j) - du.value(j) - f.value(j)).norm();
        worst = worst.max(r);
    }
    Ok(worst)
}

/// Closed form resolvent-norm envelopes for real zeta > 0.
///
/// Example id 2 (L = evaluation at 0) has both bounds:
/// (e^z - 1 - z)/z^2 <= norm <= (e^z - 1)/z. Example id 3 (L = difference
/// of evaluations at 1/2 and 0) has only the lower bound
/// 2 e^(z/2)/z^2 - 1/z - 2/z^2.
pub fn closed_form_bounds(example_id: u8, zeta: f64) -> Result<ClosedFormBounds> {
    if !(zeta > 0.0) || !zeta.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "closed form bounds need real zeta > 0, got {zeta}"
        )));
    }
    match example_id {
        2 => Ok(ClosedFormBounds {
            lower: (zeta.exp_m1() - zeta) / (zeta * zeta),
            upper: Some(zeta.exp_m1() / zeta),
        }),
        3 => Ok(ClosedFormBounds {
            lower: 2.0 * (0.5 * zeta).exp() / (zeta * zeta) - 1.0 / zeta - 2.0 / (zeta * zeta),
            upper: None,
        }),
        other => Err(Error::UnknownExample(other)),
    }
}

/// Witness function f(x) = x for the example with L = evaluation at 0.
/// Its resolvent image has sup norm exactly the closed form lower bound.
pub fn example2_witness(n: usize) -> Result<GridFunction> {
    GridFunction::from_fn(n, |x| Complex64::new(x, 0.0))
}

/// Witness for the example with L = difference of evaluations at 1/2 and
/// 0, for real zeta > 0:
///
/// ```text
/// f(x) = exp(zeta x) sin(4 pi x)   on [0, 1/2]
/// f(x) = exp(zeta/2) (2x - 1)      on [1/2, 1]
/// ```
///
/// Needs odd n so that 1/2 is a node (both pieces vanish there).
pub fn example3_witness(zeta: f64, n: usize) -> Result<GridFunction> {
    if !(zeta > 0.0) || !zeta.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "the witness needs real zeta > 0, got {zeta}"
        )));
    }
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "the witness needs an odd grid with n >= 3 so that 1/2 is a node, got {n}"
        )));
    }
    let half_exp = (0.5 * zeta).exp();
    GridFunction::from_fn(n, |x| {
        if x <= 0.5 {
            Complex64::new((zeta * x).exp() * (4.0 * std::f64::consts::PI * x).sin(), 0.0)
        } else {
            Complex64::new(half_exp * (2.0 * x - 1.0), 0.0)
        }
    })
}

/// Certified lower bound for the resolvent norm at zeta: the largest ratio
/// sup|u| / sup|f| over the witness list, where u solves zeta u - u' = f.
/// Witnesses must lie in ker L; identically zero witnesses contribute
/// nothing. An empty list yields 0.
pub fn resolvent_norm_lower(
    l: &DiracFunctional,
    zeta: Complex64,
    witnesses: &[GridFunction],
    tol: f64,
) -> Result<f64> {
    let mut best = 0.0f64;
    for f in witnesses {
        let denom = f.sup_norm();
        if denom == 0.0 {
            continue;
        }
        let record = resolve_derivative(l, zeta, f, tol)?;
        best = best.max(record.solution.sup_norm() / denom);
    }
    Ok(best)
}

/// Projects f onto ker L by subtracting a multiple of an exponential
/// direction g with L(g) != 0. Returns f unchanged when L(f) = 0 already.
pub fn project_to_kernel(l: &DiracFunctional, f: &GridFunction) -> Result<GridFunction> {
    let lf = l.apply(f)?;
    if lf.norm() == 0.0 {
        return Ok(f.clone());
    }
    // A few fixed directions; the first with L(g) away from zero wins.
    for zg in [1.0, 2.0, 0.5, 3.7] {
        let g = h_zeta(Complex64::new(zg, 0.0), f.len())?;
        let lg = l.apply(&g)?;
        if lg.norm() > 1e-9 {
            return Ok(f.sub(&g.scale(lf / lg)));
        }
    }
    Err(Error::InvalidArgument(
        "no exponential direction leaves the kernel of this functional".into(),
    ))
}
