//! Closed forms against the 50-digit reference tables in `data/reference.rs`.

#[path = "data/reference.rs"]
#[allow(clippy::approx_constant)]
mod reference;

use cpwall::specfun::{
    auxiliary_f, auxiliary_g, bose_sum_p, cosine_integral, kernel_g, polygamma, q_series,
    scaled_e1, sine_integral_si,
};
use cpwall::thermal::thermal_potential_exact;
use cpwall::vacuum::h0;
use cpwall::{AtomParams, ComplexValue, ThermalEnvironment};

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

#[test]
fn trig_integrals_and_auxiliaries() {
    for &(x, ci, si, f, g) in reference::CI_SI_F_G {
        assert!(rel(cosine_integral(x).unwrap(), ci) < 1e-12, "Ci({x})");
        assert!(rel(sine_integral_si(x).unwrap(), si) < 1e-12, "si({x})");
        assert!(rel(auxiliary_f(x).unwrap(), f) < 1e-12, "F({x})");
        assert!(rel(auxiliary_g(x).unwrap(), g) < 1e-12, "G({x})");
    }
}

#[test]
fn vacuum_shape() {
    for &(x, v) in reference::H0 {
        assert!(
            rel(h0(x).unwrap(), v) < 1e-12,
            "H0({x}) = {} vs {v}",
            h0(x).unwrap()
        );
    }
}

#[test]
fn wall_kernel() {
    for &(x, v) in reference::KERNEL {
        let got = kernel_g(x);
        assert!(
            (got - v).abs() < 1e-13 * v.abs().max(1e-3),
            "G({x}) = {got} vs {v}"
        );
    }
}

#[test]
fn exponential_integral() {
    for &(re, im, vre, vim) in reference::SCALED_E1 {
        let got = scaled_e1(ComplexValue::new(re, im)).unwrap();
        let want = ComplexValue::new(vre, vim);
        assert!(
            (got - want).norm() < 1e-12 * want.norm(),
            "w = {re} + {im}i: {got} vs {want}"
        );
    }
}

#[test]
fn polygamma_values() {
    for &(m, re, im, vre, vim) in reference::POLYGAMMA {
        let got = polygamma(m, ComplexValue::new(re, im)).unwrap();
        let want = ComplexValue::new(vre, vim);
        assert!(
            (got - want).norm() < 1e-12 * want.norm(),
            "psi^({m})({re} + {im}i): {got} vs {want}"
        );
    }
}

#[test]
fn bose_sums() {
    for &(x, v) in reference::Q_SERIES {
        assert!(rel(q_series(x).unwrap(), v) < 1e-13, "Q({x})");
    }
    for &(eta, v) in reference::BOSE_P {
        assert!(rel(bose_sum_p(eta).unwrap(), v) < 1e-13, "P({eta})");
    }
}

#[test]
fn thermal_series() {
    for &(theta, u, v) in reference::THERMAL {
        let atom = AtomParams::new(theta, 1.0).unwrap();
        let env = ThermalEnvironment::from_lambda_t(1.0, &atom).unwrap();
        let got = thermal_potential_exact(&atom, &env, u).unwrap();
        assert!(
            rel(got, v) < 1e-9,
            "theta {theta}, z/lambda_T {u}: {got} vs {v}"
        );
    }
}
