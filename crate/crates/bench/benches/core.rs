use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use mvgraph_bench::{chain_product, largest_proper_ideal};
use mvgraph_core::{
    all_ideals, ideal_based_graph, metrics, run_all, zero_divisor_graph, MvAlgebra,
};

fn validation(c: &mut Criterion) {
    let mut group = c.benchmark_group("from_tables");
    for orders in [vec![12], vec![2, 2, 3], vec![3, 4, 5]] {
        let a = chain_product(&orders);
        let (oplus, star) = (a.oplus_table(), a.star_table());
        group.bench_with_input(
            BenchmarkId::from_parameter(a.order()),
            &a.order(),
            |b, &n| {
                b.iter(|| {
                    MvAlgebra::from_tables(n, black_box(oplus.clone()), star.clone(), 0, None)
                        .unwrap()
                })
            },
        );
    }
    group.finish();
}

fn ideals(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_ideals");
    for orders in [vec![2, 2, 3], vec![2, 2, 2, 2, 2], vec![2, 3, 4, 5]] {
        let a = chain_product(&orders);
        group.bench_function(BenchmarkId::from_parameter(a.order()), |b| {
            b.iter(|| all_ideals(black_box(&a)).unwrap())
        });
    }
    group.finish();
}

fn graph_metrics(c: &mut Criterion) {
    let mut group = c.benchmark_group("metrics");
    for orders in [vec![2, 2, 3], vec![3, 4, 5], vec![2, 2, 2, 2, 3]] {
        let a = chain_product(&orders);
        let gamma = zero_divisor_graph(&a).unwrap();
        let i = largest_proper_ideal(&a);
        let gamma_i = ideal_based_graph(&a, &i).unwrap();
        group.bench_function(BenchmarkId::new("gamma", a.order()), |b| {
            b.iter(|| metrics(black_box(&gamma)))
        });
        group.bench_function(BenchmarkId::new("gamma_i", a.order()), |b| {
            b.iter(|| metrics(black_box(&gamma_i)))
        });
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_all");
    group.sample_size(10);
    group.bench_function("7", |b| b.iter(|| run_all(black_box(7)).unwrap()));
    group.finish();
}

criterion_group!(benches, validation, ideals, graph_metrics, verification);
criterion_main!(benches);
