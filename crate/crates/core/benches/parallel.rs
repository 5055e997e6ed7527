use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use nogo_core::clebsch::{bracket_coeffs_direct, bracket_coeffs_recursion, ratio_bound_check};
use nogo_core::exec::{self, Mode};
use nogo_core::nogo::run_sweep;

const MODES: [(&str, Mode); 2] = [("sequential", Mode::Sequential), ("parallel", Mode::Parallel)];

fn nogo_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("nogo_sweep");
    g.sample_size(10);
    for (name, mode) in MODES {
        exec::set_mode(mode);
        g.bench_with_input(BenchmarkId::new(name, "jmax=4"), &8u32, |b, &two_jmax| {
            b.iter(|| black_box(run_sweep(two_jmax)))
        });
    }
    g.finish();
}

fn recursion_rows(c: &mut Criterion) {
    let rows: Vec<(u32, u32)> = (1..=6).flat_map(|l| (1..=2 * l).map(move |j| (l, j))).collect();
    let mut g = c.benchmark_group("recursion_vs_direct");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::new(name, "l<=6"), |b| {
            b.iter(|| {
                exec::map_in(mode, &rows, |&(l, j)| {
                    let r = bracket_coeffs_recursion(l, j).unwrap();
                    r.y == bracket_coeffs_direct(l, l as i64 - j as i64, l as i64).unwrap()
                })
            })
        });
    }
    g.finish();
}

fn ratio_grid(c: &mut Criterion) {
    let grid: Vec<(u32, u32)> = (5..=40u32).flat_map(|l| (2..=l).filter(move |&k| 2 * k + 1 >= l).map(move |k| (l, k))).collect();
    let mut g = c.benchmark_group("ratio_grid");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::new(name, "l<=40"), |b| {
            b.iter(|| exec::map_in(mode, &grid, |&(l, k)| ratio_bound_check(l, k)))
        });
    }
    g.finish();
}

criterion_group!(benches, nogo_sweep, recursion_rows, ratio_grid);
criterion_main!(benches);
