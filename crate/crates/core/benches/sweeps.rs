use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hd_core::intertwine::multiplicity_one;
use hd_core::par::{self, Exec};
use hd_core::reps::{occurring_params, pairs_up_to};
use hd_core::verify::{cayley_volume_check, distribution_invariance, gaussian_vandermonde_mc};
use hd_core::HalfInt;

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn multiplicity_sweep(c: &mut Criterion) {
    let cases: Vec<_> = pairs_up_to(3, 5)
        .into_iter()
        .flat_map(|p| {
            occurring_params(p, HalfInt::from_doubled(13))
                .unwrap()
                .into_iter()
                .map(move |m| (p, m))
        })
        .collect();
    let mut g = c.benchmark_group("multiplicity_one_sweep");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| {
                par::map(exec, &cases, |(p, m)| {
                    multiplicity_one(m, *p).unwrap().holds
                })
                .into_iter()
                .all(|h| h)
            })
        });
    }
    g.finish();
}

fn monte_carlo(c: &mut Criterion) {
    let mut g = c.benchmark_group("monte_carlo");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(
            BenchmarkId::new("cayley_volume_n2", name),
            &exec,
            |b, &e| b.iter(|| cayley_volume_check(2, black_box(200_000), 42, e)),
        );
        g.bench_with_input(
            BenchmarkId::new("gaussian_vandermonde_l3_c2", name),
            &exec,
            |b, &e| b.iter(|| gaussian_vandermonde_mc(3, 2, black_box(200_000), 42, e)),
        );
    }
    g.finish();
}

fn invariance(c: &mut Criterion) {
    let p = hd_core::DualPair::new(2, 4).unwrap();
    let m = occurring_params(p, HalfInt::from_doubled(9))
        .unwrap()
        .pop()
        .unwrap();
    let mut g = c.benchmark_group("distribution_invariance");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| distribution_invariance(&m, p, black_box(200), 7, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, multiplicity_sweep, monte_carlo, invariance);
criterion_main!(benches);
