//! Sequential against parallel execution on the main sweeps.
//!
//! The transition matrix is cached per degree, so its cost is measured
//! through the F-expansions of the R basis it is assembled from.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use yrqs::compositions::{Composition, Partition};
use yrqs::insertion_lr::lr_coefficients_with;
use yrqs::par::Exec;
use yrqs::qsym::{expand_in_f_with, skew_r_with, Basis, SkewRoute};
use yrqs::verify::count_by_shape;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_ssyrt");
    for n in [5, 6] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| b.iter(|| count_by_shape(exec, n, n)));
        }
    }
    g.finish();
}

fn r_to_f(c: &mut Criterion) {
    let mut g = c.benchmark_group("r_to_f_rows");
    for n in [6, 7] {
        let shapes = Composition::all_of(n);
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &shapes, |b, shapes| {
                b.iter(|| shapes.iter().map(|a| expand_in_f_with(exec, Basis::R, a)).count())
            });
        }
    }
    g.finish();
}

fn lr(c: &mut Criterion) {
    let mut g = c.benchmark_group("lr_coefficients");
    let alpha = Composition::new(vec![2, 1, 2]).unwrap();
    let lambda = Partition::new(vec![2, 1]).unwrap();
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| lr_coefficients_with(exec, &alpha, &lambda)));
    }
    g.finish();
}

fn skew(c: &mut Criterion) {
    let mut g = c.benchmark_group("skew_r_sweep");
    let pairs: Vec<(Composition, Composition)> = Composition::all_of(6)
        .into_iter()
        .flat_map(|a| {
            let inner: Vec<Composition> = Composition::all_of(2).into_iter().filter(|b| b.contained_in(&a)).collect();
            inner.into_iter().map(move |b| (a.clone(), b))
        })
        .collect();
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| {
                pairs
                    .iter()
                    .map(|(a, beta)| skew_r_with(exec, a, beta, SkewRoute::Combinatorial).unwrap())
                    .count()
            })
        });
    }
    g.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = enumeration, r_to_f, lr, skew
}
criterion_main!(benches);
