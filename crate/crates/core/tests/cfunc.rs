//! The derivative operator restricted by point functionals, checked
//! against hand integrated closed forms.
//!
//! Every expected value in this file comes from an antiderivative worked
//! out by hand, never from the quadrature under test. Where a value is
//! only reachable numerically the rate of the quadrature error (second
//! order in the step) sets the tolerance.

use num_complex::Complex64;

use specscan_core::cfunc::{
    closed_form_bounds, example2_witness, example3_witness, h_zeta, k_zeta, k_zeta_norm_exact,
    project_to_kernel, resolve_derivative, resolvent_norm_lower, residual_ode, spectrum_member,
    DEFAULT_GRID_N,
};
use specscan_core::dirac::DiracFunctional;
use specscan_core::grid::GridFunction;

const TAU: f64 = 2.0 * std::f64::consts::PI;

fn sup_distance(a: &GridFunction, b: &GridFunction) -> f64 {
    a.sub(b).sup_norm()
}

/// K applied to an exponential has the closed form
/// (h_eta - h_zeta) / (eta - zeta) whenever the exponents differ.
#[test]
fn volterra_on_exponentials_matches_the_antiderivative() {
    let cases = [
        (Complex64::new(1.0, 2.0), Complex64::new(-0.5, 4.0)),
        (Complex64::new(0.0, 0.0), Complex64::new(2.0, 0.0)),
        (Complex64::new(-2.0, 1.0), Complex64::new(0.5, -3.0)),
    ];
    for (zeta, eta) in cases {
        let f = h_zeta(eta, DEFAULT_GRID_N).unwrap();
        let got = k_zeta(zeta, &f);
        let expect = GridFunction::from_fn(DEFAULT_GRID_N, |x| {
            ((eta * x).exp() - (zeta * x).exp()) / (eta - zeta)
        })
        .unwrap();
        let err = sup_distance(&got, &expect);
        assert!(err <= 2e-5, "zeta {zeta} eta {eta}: error {err}");
    }
}

#[test]
fn volterra_at_zero_integrates_polynomials_exactly() {
    // The trapezoid rule is exact on affine integrands, so K_0 applied to
    // x gives x^2 / 2 to rounding accuracy.
    let f = example2_witness(DEFAULT_GRID_N).unwrap();
    let got = k_zeta(Complex64::new(0.0, 0.0), &f);
    let expect =
        GridFunction::from_fn(DEFAULT_GRID_N, |x| Complex64::new(0.5 * x * x, 0.0)).unwrap();
    assert!(sup_distance(&got, &expect) <= 1e-13);
}

#[test]
fn volterra_norm_formula_matches_the_grid() {
    for re in [-2.0, -1.0, 0.0, 0.5, 1.0, 2.0] {
        for im in [0.0, 3.0, -7.0] {
            let zeta = Complex64::new(re, im);
            let exact = k_zeta_norm_exact(zeta);
            // The norm is attained on the pure oscillation with the same
            // frequency as zeta.
            let witness =
                GridFunction::from_fn(DEFAULT_GRID_N, |x| Complex64::new(0.0, im * x).exp())
                    .unwrap();
            let attained = k_zeta(zeta, &witness).sup_norm() / witness.sup_norm();
            assert!(
                (attained - exact).abs() <= 1e-3,
                "re {re} im {im}: attained {attained} vs exact {exact}"
            );

            // No sampled function may beat the formula by more than the
            // quadrature error.
            for probe in [
                GridFunction::from_fn(DEFAULT_GRID_N, |x| Complex64::new((TAU * x).sin(), x))
                    .unwrap(),
                example2_witness(DEFAULT_GRID_N).unwrap(),
            ] {
                let ratio = k_zeta(zeta, &probe).sup_norm() / probe.sup_norm();
                assert!(
                    ratio <= exact + 1e-3,
                    "re {re} im {im}: ratio {ratio} beats {exact}"
                );
            }
        }
    }
}

#[test]
fn evaluation_at_zero_resolvent_has_the_closed_form() {
    // With the functional u(0) the constant gamma vanishes and the
    // resolvent of f(x) = x is -(e^{zeta x} - 1 - zeta x) / zeta^2.
    let l = DiracFunctional::delta(0.0).unwrap();
    let f = example2_witness(DEFAULT_GRID_N).unwrap();
    for zeta in [
        Complex64::new(1.0, 0.0),
        Complex64::new(2.0, 3.0),
        Complex64::new(-1.5, 0.5),
    ] {
        let record = resolve_derivative(&l, zeta, &f, 1e-9).unwrap();
        assert_eq!(record.gamma, Complex64::new(0.0, 0.0));
        let expect = GridFunction::from_fn(DEFAULT_GRID_N, |x| {
            let zx = zeta * x;
            -(zx.exp() - 1.0 - zx) / (zeta * zeta)
        })
        .unwrap();
        let err = sup_distance(&record.solution, &expect);
        assert!(err <= 1e-5, "zeta {zeta}: error {err}");
    }
}

#[test]
fn half_point_difference_resolvent_has_the_piecewise_form() {
    // For the functional u(1/2) - u(0) and the tailored witness the
    // resolvent was integrated by hand:
    //   x <= 1/2 : -e^{zeta x} (1 - cos 4 pi x) / (4 pi)
    //   x >= 1/2 : e^{zeta/2} ((2x-1)/zeta + 2/zeta^2) - 2 e^{zeta x}/zeta^2
    let l = DiracFunctional::delta_diff(0.5, 0.0).unwrap();
    for zr in [1.0, 8.0] {
        let zeta = Complex64::new(zr, 0.0);
        let f = example3_witness(zr, DEFAULT_GRID_N).unwrap();
        let record = resolve_derivative(&l, zeta, &f, 1e-9).unwrap();
        let expect = GridFunction::from_fn(DEFAULT_GRID_N, |x| {
            if x <= 0.5 {
                -(zeta * x).exp() * (1.0 - (2.0 * TAU * x).cos()) / (2.0 * TAU)
            } else {
                (zeta * 0.5).exp() * ((2.0 * x - 1.0) / zeta + 2.0 / (zeta * zeta))
                    - 2.0 * (zeta * x).exp() / (zeta * zeta)
            }
        })
        .unwrap();
        let scale = expect.sup_norm();
        let err = sup_distance(&record.solution, &expect);
        assert!(
            err <= 2e-4 * scale,
            "zeta {zr}: error {err} at scale {scale}"
        );

        // The endpoint value pins the lower envelope of the resolvent
        // norm.
        let end = record.solution.value(DEFAULT_GRID_N - 1);
        let end_expect = (zeta * 0.5).exp() * (1.0 / zeta + 2.0 / (zeta * zeta))
            - 2.0 * zeta.exp() / (zeta * zeta);
        assert!(
            (end - end_expect).norm() <= 2e-4 * scale,
            "endpoint {end} vs {end_expect}"
        );

        let lower = closed_form_bounds(3, zr).unwrap().lower;
        let ratio = record.solution.sup_norm() / f.sup_norm();
        assert!(
            ratio >= lower - 1e-3,
            "zeta {zr}: ratio {ratio} below envelope {lower}"
        );
    }
}

#[test]
fn growth_envelope_brackets_the_witness_ratio() {
    let l = DiracFunctional::delta(0.0).unwrap();
    let witness = example2_witness(DEFAULT_GRID_N).unwrap();
    let mut ratios = Vec::new();
    for zr in [1.0, 2.0, 4.0, 8.0] {
        let zeta = Complex64::new(zr, 0.0);
        let bounds = closed_form_bounds(2, zr).unwrap();
        let ratio = resolvent_norm_lower(&l, zeta, std::slice::from_ref(&witness), 1e-9).unwrap();
        assert!(
            ratio >= bounds.lower - 0.05,
            "zeta {zr}: ratio {ratio} below {}",
            bounds.lower
        );
        let upper = bounds.upper.unwrap();
        assert!(
            ratio <= upper + 0.05,
            "zeta {zr}: ratio {ratio} above {upper}"
        );
        ratios.push(ratio);
    }
    assert!(
        ratios[3] / ratios[0] > 10.0,
        "growth ratio {} not super linear",
        ratios[3] / ratios[0]
    );
}

#[test]
fn ode_residual_shrinks_like_the_grid_step() {
    let l = DiracFunctional::delta(0.0).unwrap();
    let zeta = Complex64::new(2.0, 1.0);
    for n in [101, 201, 401, 2001] {
        let f = example2_witness(n).unwrap();
        let record = resolve_derivative(&l, zeta, &f, 1e-9).unwrap();
        let r = residual_ode(zeta, &record.solution, &f).unwrap();
        assert!(r <= 50.0 / n as f64, "n {n}: residual {r}");
    }
}

#[test]
fn resolvents_commute_along_the_identity() {
    // R(zeta) - R(eta) = (eta - zeta) R(zeta) R(eta) on the kernel.
    let l = DiracFunctional::delta(0.0).unwrap();
    let f = example2_witness(DEFAULT_GRID_N).unwrap();
    let pairs = [
        (Complex64::new(1.0, 1.0), Complex64::new(2.0, -0.5)),
        (Complex64::new(-1.0, 2.0), Complex64::new(0.5, 0.5)),
        (Complex64::new(3.0, 0.0), Complex64::new(1.0, -2.0)),
    ];
    for (zeta, eta) in pairs {
        let u = resolve_derivative(&l, zeta, &f, 1e-9).unwrap().solution;
        let v = resolve_derivative(&l, eta, &f, 1e-9).unwrap().solution;
        let w = resolve_derivative(&l, zeta, &v, 1e-9).unwrap().solution;
        let lhs = u.sub(&v);
        let rhs = w.scale(eta - zeta);
        let err = sup_distance(&lhs, &rhs);
        assert!(
            err <= 1e-4 * f.sup_norm(),
            "pair ({zeta}, {eta}): defect {err}"
        );
    }
}

#[test]
fn spectrum_membership_follows_the_zero_set() {
    let null = DiracFunctional::null();
    let at_zero = DiracFunctional::delta(0.0).unwrap();
    let diff = DiracFunctional::delta_diff(0.5, 0.0).unwrap();
    let tol = 1e-9;

    for zeta in [
        Complex64::new(0.0, 0.0),
        Complex64::new(3.0, -4.0),
        Complex64::new(-17.0, 26.0),
    ] {
        assert!(spectrum_member(&null, zeta, tol).unwrap());
        assert!(!spectrum_member(&at_zero, zeta, tol).unwrap());
    }

    for k in [-2i32, -1, 0, 1, 2] {
        let zeta = Complex64::new(0.0, 2.0 * TAU * k as f64);
        assert!(spectrum_member(&diff, zeta, tol).unwrap(), "k = {k}");
    }
    for zeta in [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, TAU),
        Complex64::new(0.5, 2.0 * TAU),
    ] {
        assert!(!spectrum_member(&diff, zeta, tol).unwrap(), "zeta {zeta}");
    }
}

#[test]
fn spectral_points_refuse_to_resolve() {
    let l = DiracFunctional::delta_diff(0.5, 0.0).unwrap();
    let f = example2_witness(DEFAULT_GRID_N).unwrap();
    let f = project_to_kernel(&l, &f).unwrap();
    let err = resolve_derivative(&l, Complex64::new(0.0, 2.0 * TAU), &f, 1e-9);
    assert!(err.is_err());
}

#[test]
fn projection_lands_in_the_kernel() {
    let l = DiracFunctional::delta_diff(0.5, 0.0).unwrap();
    let f = GridFunction::from_fn(DEFAULT_GRID_N, |x| Complex64::new(x * x, 1.0 - x)).unwrap();
    let g = project_to_kernel(&l, &f).unwrap();
    assert!(l.apply(&g).unwrap().norm() <= 1e-9 * g.sup_norm().max(1.0));
    // Functions already in the kernel pass through untouched.
    let h = example2_witness(DEFAULT_GRID_N).unwrap();
    let l0 = DiracFunctional::delta(0.0).unwrap();
    let back = project_to_kernel(&l0, &h).unwrap();
    assert!(sup_distance(&h, &back) == 0.0);
}
