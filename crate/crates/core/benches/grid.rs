use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use cpwall::grid::{linspace, logspace, map_grid, map_grid_sequential};
use cpwall::oracle::thermal_quadrature;
use cpwall::thermal::total_potential;
use cpwall::{AtomParams, ThermalEnvironment};

fn setup() -> (AtomParams, ThermalEnvironment) {
    let atom = AtomParams::new(100.0, 1.0).unwrap();
    let env = ThermalEnvironment::from_lambda_t(1.0, &atom).unwrap();
    (atom, env)
}

// Figure-2 style sweep of the exact total potential.
fn exact_sweep(c: &mut Criterion) {
    let (atom, env) = setup();
    let mut group = c.benchmark_group("exact_sweep");
    for n in [200usize, 2000] {
        let zs = logspace(1e-3, 10.0, n);
        let f = |z: f64| {
            total_potential(&atom, &env, z)
                .map(|b| b.total)
                .unwrap_or(f64::NAN)
        };
        group.bench_with_input(BenchmarkId::new("sequential", n), &zs, |b, zs| {
            b.iter(|| map_grid_sequential(black_box(zs), f))
        });
        group.bench_with_input(BenchmarkId::new("parallel", n), &zs, |b, zs| {
            b.iter(|| map_grid(black_box(zs), f))
        });
    }
    group.finish();
}

// Oracle sweep, the expensive half of the verification run.
fn oracle_sweep(c: &mut Criterion) {
    let (atom, env) = setup();
    let zs = linspace(0.01, 2.0, 40);
    let f = |z: f64| {
        thermal_quadrature(&atom, &env, z)
            .map(|q| q.value)
            .unwrap_or(f64::NAN)
    };
    let mut group = c.benchmark_group("oracle_sweep");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| map_grid_sequential(black_box(&zs), f))
    });
    group.bench_function("parallel", |b| b.iter(|| map_grid(black_box(&zs), f)));
    group.finish();
}

criterion_group!(benches, exact_sweep, oracle_sweep);
criterion_main!(benches);
