use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use mostar_bench::witness_graphs;
use mostar_core::{canonical_certificate, generate_connected, mostar_index, three_layer_graph, witness};

fn index(c: &mut Criterion) {
    let mut group = c.benchmark_group("mostar_index");
    for (p, g) in witness_graphs() {
        group.bench_with_input(BenchmarkId::new("witness", p), &g, |b, g| b.iter(|| mostar_index(black_box(g))));
    }
    group.finish();
}

fn construct(c: &mut Criterion) {
    c.bench_function("witness_sweep_0_to_200", |b| {
        b.iter(|| (0..=200u64).filter(|&p| p != 1).map(|p| witness(p).unwrap().certified_mo).sum::<u64>())
    });
}

fn canon(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_certificate");
    for p in [3, 7, 15] {
        let g = three_layer_graph(p).unwrap();
        group.bench_with_input(BenchmarkId::new("three_layer", p), &g, |b, g| {
            b.iter(|| canonical_certificate(black_box(g)))
        });
    }
    group.finish();
}

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("connected_7", |b| b.iter(|| generate_connected(black_box(7)).unwrap().len()));
    group.finish();
}

criterion_group!(benches, index, construct, canon, enumerate);
criterion_main!(benches);
