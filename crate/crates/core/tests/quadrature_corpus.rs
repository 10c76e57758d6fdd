//! Closed-form corpus for the integration engine: every reported error
//! estimate must bound the true error, and at the default tolerance the true
//! error must sit at or below 1e-10.

use hallgh_core::quadrature::{
    integrate_finite, integrate_halfline, QuadResult, SingularitySpec,
};
use hallgh_core::specfun::beta_fn;
use proptest::prelude::*;

use std::f64::consts::PI;

struct Entry {
    name: &'static str,
    result: QuadResult,
    exact: f64,
}

/// The closed-form corpus: three finite-interval and three half-line
/// integrals, all with elementary or beta-function values.
fn corpus(tol: f64) -> Vec<Entry> {
    let none = SingularitySpec::NONE;
    vec![
        Entry {
            name: "1 on [0,1]",
            result: integrate_finite(|_| 1.0, 0.0, 1.0, none, tol).unwrap(),
            exact: 1.0,
        },
        Entry {
            name: "u^(-1/2) on [0,1]",
            result: integrate_finite(
                |u| u.powf(-0.5),
                0.0,
                1.0,
                SingularitySpec::left(-0.5).unwrap(),
                tol,
            )
            .unwrap(),
            exact: 2.0,
        },
        Entry {
            name: "(1-u)^(-1/2) on [0,1]",
            result: integrate_finite(
                |u| (1.0 - u).powf(-0.5),
                0.0,
                1.0,
                SingularitySpec::right(-0.5).unwrap(),
                tol,
            )
            .unwrap(),
            exact: 2.0,
        },
        Entry {
            name: "(1+w)^(-2) on [0,inf)",
            result: integrate_halfline(|w| (1.0 + w).powi(-2), 0.0, tol).unwrap(),
            exact: 1.0,
        },
        Entry {
            name: "w^(-1/2) (1+w)^(-3/2) on [0,inf)",
            result: integrate_halfline(|w| w.powf(-0.5) * (1.0 + w).powf(-1.5), -0.5, tol)
                .unwrap(),
            exact: beta_fn(0.5, 1.0).unwrap(),
        },
        Entry {
            name: "w^(-1/2) (1+w)^(-1) on [0,inf)",
            result: integrate_halfline(|w| w.powf(-0.5) / (1.0 + w), -0.5, tol).unwrap(),
            exact: beta_fn(0.5, 0.5).unwrap(),
        },
    ]
}

#[test]
fn corpus_error_estimates_are_honest() {
    for e in corpus(1e-10) {
        let true_err = (e.result.value - e.exact).abs();
        assert!(
            true_err <= e.result.err_estimate.max(1e-15),
            "{}: true error {true_err:.3e} exceeds estimate {:.3e}",
            e.name,
            e.result.err_estimate
        );
        assert!(true_err <= 1e-10, "{}: true error {true_err:.3e} above 1e-10", e.name);
        assert!(e.result.err_estimate >= 0.0);
        assert!(e.result.evals >= 1);
    }
}

#[test]
fn beta_function_values_line_up() {
    // the two half-line beta integrals against their special-function values
    assert!((beta_fn(0.5, 1.0).unwrap() - 2.0).abs() < 1e-14);
    assert!((beta_fn(0.5, 0.5).unwrap() - PI).abs() < 1e-13);
}

#[test]
fn scaling_is_linear() {
    let base = integrate_halfline(|w| w.powf(-0.5) * (1.0 + w).powf(-1.5), -0.5, 1e-10)
        .unwrap()
        .value;
    for c in [2.0, -3.0] {
        let scaled =
            integrate_halfline(|w| c * w.powf(-0.5) * (1.0 + w).powf(-1.5), -0.5, 1e-10)
                .unwrap()
                .value;
        let rel = ((scaled - c * base) / (c * base)).abs();
        assert!(rel <= 1e-12, "c={c}: {scaled} vs {}", c * base);
    }
}

#[test]
fn interval_additivity_within_estimates() {
    let whole = integrate_finite(|x| x.cos(), 0.0, 1.0, SingularitySpec::NONE, 1e-10).unwrap();
    let lo = integrate_finite(|x| x.cos(), 0.0, 0.5, SingularitySpec::NONE, 1e-10).unwrap();
    let hi = integrate_finite(|x| x.cos(), 0.5, 1.0, SingularitySpec::NONE, 1e-10).unwrap();
    let gap = (whole.value - lo.value - hi.value).abs();
    let budget = whole.err_estimate + lo.err_estimate + hi.err_estimate;
    assert!(gap <= budget.max(1e-14), "gap {gap:.3e} vs combined estimate {budget:.3e}");
    assert!((whole.value - 1.0f64.sin()).abs() <= 1e-12);
}

#[test]
fn halfline_matches_manual_compactification() {
    // the half-line map is w = v/(1-v) with Jacobian (1-v)^-2; applying it by
    // hand and integrating on [0,1) must agree to machine precision
    let f = |w: f64| (1.0 + w).powi(-2);
    let auto = integrate_halfline(f, 0.0, 1e-12).unwrap();
    let manual = integrate_finite(
        |v| {
            let om = 1.0 - v;
            f(v / om) / (om * om)
        },
        0.0,
        1.0,
        SingularitySpec::right(-0.5).unwrap(),
        1e-12,
    )
    .unwrap();
    assert!((auto.value - manual.value).abs() <= 1e-12);
}

#[test]
fn both_endpoint_singularities_combine() {
    // B(2/3, 1/2) with singularities at the two ends simultaneously
    let r = integrate_finite(
        |u| u.powf(-1.0 / 3.0) * (1.0 - u).powf(-0.5),
        0.0,
        1.0,
        SingularitySpec::new(-1.0 / 3.0, -0.5).unwrap(),
        1e-10,
    )
    .unwrap();
    let exact = beta_fn(2.0 / 3.0, 0.5).unwrap();
    let err = (r.value - exact).abs();
    assert!(err <= r.err_estimate.max(1e-13), "err {err:.3e} vs estimate {:.3e}", r.err_estimate);
    assert!(err <= 1e-10);
}

#[test]
fn positive_endpoint_exponent_is_supported() {
    // integrand vanishing like w^(1/2): B(3/2, 1/2) = pi/2 over the half-line
    let r = integrate_halfline(|w| w.sqrt() * (1.0 + w).powi(-2), 0.5, 1e-10).unwrap();
    assert!((r.value - PI / 2.0).abs() <= 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // cubic with exact antiderivative over a random subinterval
    #[test]
    fn random_cubics_integrate_exactly(
        c0 in -3.0f64..3.0,
        c1 in -3.0f64..3.0,
        c2 in -3.0f64..3.0,
        c3 in -3.0f64..3.0,
        a in -4.0f64..1.0,
        len in 0.1f64..5.0,
    ) {
        let b = a + len;
        let f = |x: f64| c0 + x * (c1 + x * (c2 + x * c3));
        let anti = |x: f64| x * (c0 + x * (c1 / 2.0 + x * (c2 / 3.0 + x * c3 / 4.0)));
        let exact = anti(b) - anti(a);
        let r = integrate_finite(f, a, b, SingularitySpec::NONE, 1e-10).unwrap();
        let err = (r.value - exact).abs();
        let allow = r.err_estimate.max(1e-10 * (1.0 + exact.abs()));
        prop_assert!(err <= allow, "err {} vs allow {}", err, allow);
    }

    // pure power u^e on [0,1] with the exponent declared: the substitution
    // renders the integrand constant, so the value is machine-exact
    #[test]
    fn declared_power_singularities_are_exact(e in -0.9f64..2.0) {
        let r = integrate_finite(
            |u| u.powf(e),
            0.0,
            1.0,
            SingularitySpec::left(e).unwrap(),
            1e-10,
        ).unwrap();
        let exact = 1.0 / (1.0 + e);
        prop_assert!((r.value - exact).abs() <= 1e-12 * exact.abs().max(1.0));
    }
}
