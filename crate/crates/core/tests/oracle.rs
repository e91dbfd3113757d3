//! Quadrature oracles against the closed forms.

use cpwall::oracle::{
    bose_integral, bose_integral_quadrature, f_integral_oracle, thermal_quadrature,
    thermal_quadrature_with, vacuum_split_quadrature, vacuum_split_quadrature_with, PoleOptions,
    VacuumPart,
};
use cpwall::specfun::auxiliary_f;
use cpwall::thermal::thermal_potential_exact;
use cpwall::vacuum::vacuum_potential;
use cpwall::{AtomParams, ThermalEnvironment};

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn f_integral_matches_ci_si_route() {
    for x in [0.05, 0.1, 1.0, 5.0, 30.0, 100.0] {
        let q = f_integral_oracle(x).unwrap();
        let f = auxiliary_f(x).unwrap();
        assert!(rel(q.value, f) < 1e-10, "x = {x}: {} vs {f}", q.value);
        assert!(
            (q.value - f).abs() <= q.abs_error_estimate.max(1e-15 * f),
            "x = {x}"
        );
    }
    let x = 1e4;
    assert!((f_integral_oracle(x).unwrap().value * x - 1.0).abs() < 1e-7);
}

#[test]
fn vacuum_total_matches_closed_form() {
    let atom = AtomParams::new(1.0, 1.0).unwrap();
    for x0 in [0.05, 0.3, 1.0, 4.0, 20.0, 100.0] {
        let z = x0 / 2.0;
        let q = vacuum_split_quadrature(&atom, z, VacuumPart::Total).unwrap();
        let v = vacuum_potential(&atom, z).unwrap();
        assert!(rel(q.value, v) < 1e-8, "x0 = {x0}: {} vs {v}", q.value);
        assert!(q.regulator_epsilon > 0.0 && q.extrapolation_steps >= 4);
    }
}

#[test]
fn vacuum_parts_add_up_and_cancel_when_retarded() {
    let atom = AtomParams::new(1.0, 1.0).unwrap();
    for x0 in [0.1, 1.0, 10.0, 100.0] {
        let z = x0 / 2.0;
        let rr = vacuum_split_quadrature(&atom, z, VacuumPart::Rr).unwrap();
        let fr = vacuum_split_quadrature(&atom, z, VacuumPart::Fr).unwrap();
        let total = vacuum_split_quadrature(&atom, z, VacuumPart::Total).unwrap();
        let budget = rr.abs_error_estimate + fr.abs_error_estimate + total.abs_error_estimate;
        assert!(
            (rr.value + fr.value - total.value).abs() <= budget,
            "x0 = {x0}"
        );
        if x0 < 1.0 {
            assert!(rr.value.abs() > fr.value.abs(), "x0 = {x0}");
        }
        // far from the wall the two parts are each much larger than their sum
        if x0 > 1.0 {
            assert!(total.value.abs() < 0.01 * rr.value.abs(), "x0 = {x0}");
            assert!(rr.value * fr.value < 0.0, "x0 = {x0}");
        }
    }
}

#[test]
fn pole_subtraction_width_is_irrelevant() {
    let atom = AtomParams::new(1.0, 1.0).unwrap();
    let narrow = PoleOptions {
        halfwidth_fraction: 0.25,
    };
    let a = vacuum_split_quadrature(&atom, 1.5, VacuumPart::Fr)
        .unwrap()
        .value;
    let b = vacuum_split_quadrature_with(&atom, 1.5, VacuumPart::Fr, narrow)
        .unwrap()
        .value;
    assert!(rel(b, a) < 1e-9, "{a} {b}");

    let atom = AtomParams::new(100.0, 1.0).unwrap();
    let env = ThermalEnvironment::from_lambda_t(1.0, &atom).unwrap();
    let a = thermal_quadrature(&atom, &env, 0.4).unwrap().value;
    let b = thermal_quadrature_with(&atom, &env, 0.4, narrow)
        .unwrap()
        .value;
    assert!(rel(b, a) < 1e-9, "{a} {b}");
}

#[test]
fn thermal_matches_exact_series() {
    for theta in [30.0, 100.0] {
        let atom = AtomParams::new(theta, 1.0).unwrap();
        let env = ThermalEnvironment::from_lambda_t(1.0, &atom).unwrap();
        for u in [0.01, 0.3, 0.52, 1.0, 2.0] {
            let q = thermal_quadrature(&atom, &env, u).unwrap();
            let v = thermal_potential_exact(&atom, &env, u).unwrap();
            assert!(
                rel(q.value, v) < 1e-6,
                "theta {theta}, u {u}: {} vs {v}",
                q.value
            );
        }
    }
}

#[test]
fn bose_integral_closed_form_and_quadrature() {
    for n in 1..=8 {
        let q = bose_integral_quadrature(n).unwrap();
        let c = bose_integral(n).unwrap();
        assert!(rel(q.value, c) < 1e-10, "n = {n}");
    }
}
