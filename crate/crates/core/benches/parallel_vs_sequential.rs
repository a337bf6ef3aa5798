use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use blowup_core::graph::{distance_matrix, enumerate_connected_graphs, Graph};
use blowup_core::linalg::all_principal_minors_with;
use blowup_core::matroid::{is_delta_matroid_with, path_rhs_family};
use blowup_core::par::map_slice;
use blowup_core::poly::graph_polynomial;
use blowup_core::stability::{rayleigh_sample_check, theorem4_report, Sampling};
use blowup_core::{Config, Exec};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn minors(c: &mut Criterion) {
    let m = distance_matrix(&Graph::cycle(14)).unwrap().shifted();
    let mut group = c.benchmark_group("principal_minors_c14");
    group.sample_size(10);
    for (name, exec) in MODES {
        let cfg = Config::default().with_exec(exec);
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| all_principal_minors_with(&m, &cfg).unwrap())
        });
    }
    group.finish();
}

fn rayleigh(c: &mut Criterion) {
    let p = graph_polynomial(&Graph::complete_multipartite(&[3, 3, 3])).unwrap();
    let mut group = c.benchmark_group("rayleigh_k333");
    group.sample_size(10);
    for (name, exec) in MODES {
        let s = Sampling::new(7, 200).with_exec(exec);
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| rayleigh_sample_check(&p, &s).unwrap())
        });
    }
    group.finish();
}

fn exchange(c: &mut Criterion) {
    let f = path_rhs_family(12).unwrap();
    let mut group = c.benchmark_group("exchange_path12");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| is_delta_matroid_with(&f, exec).unwrap())
        });
    }
    group.finish();
}

fn corpus(c: &mut Criterion) {
    let graphs: Vec<Graph> = enumerate_connected_graphs(6, true).unwrap().collect();
    let inner = Sampling::new(1, 20).with_exec(Exec::Sequential);
    let mut group = c.benchmark_group("theorem4_n6_corpus");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| map_slice(exec, &graphs, |g| theorem4_report(g, &inner).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, minors, rayleigh, exchange, corpus);
criterion_main!(benches);
