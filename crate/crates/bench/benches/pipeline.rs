use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use rc2::{
    brute_force_rc2, color_rc2, generate_family, is_rainbow_two_connected_with,
    spanning_minimally_two_connected, Family, VerifyLimits, DEFAULT_BUDGET,
};

fn coloring(c: &mut Criterion) {
    let mut group = c.benchmark_group("color_rc2");
    for fam in [
        Family::Wheel(9),
        Family::Theta(3, 3, 4),
        Family::CompleteBipartite(4, 5),
        Family::RandomTwoConnected { n: 12, ears: 4 },
        Family::RandomTwoConnected { n: 40, ears: 12 },
    ] {
        let g = generate_family(&fam, 1).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(fam), &g, |b, g| {
            b.iter(|| color_rc2(black_box(g)))
        });
    }
    group.finish();
}

fn minimalize(c: &mut Criterion) {
    let g = generate_family(&Family::Complete(12), 0).unwrap();
    c.bench_function("minimalize/complete(12)", |b| {
        b.iter(|| spanning_minimally_two_connected(black_box(&g)))
    });
}

fn verification(c: &mut Criterion) {
    let limits = VerifyLimits {
        max_vertices: 12,
        max_edges: 32,
    };
    let mut group = c.benchmark_group("verify");
    for fam in [
        Family::Wheel(9),
        Family::Complete(7),
        Family::RandomTwoConnected { n: 12, ears: 4 },
    ] {
        let g = generate_family(&fam, 1).unwrap();
        let coloring = color_rc2(&g).unwrap().coloring;
        group.bench_with_input(BenchmarkId::from_parameter(fam), &g, |b, g| {
            b.iter(|| is_rainbow_two_connected_with(black_box(g), &coloring, &limits))
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_force_rc2");
    group.sample_size(10);
    for fam in [Family::Cycle(6), Family::Complete(4), Family::Wheel(5)] {
        let g = generate_family(&fam, 0).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(fam), &g, |b, g| {
            b.iter(|| brute_force_rc2(black_box(g), g.edge_count(), DEFAULT_BUDGET))
        });
    }
    group.finish();
}

criterion_group!(benches, coloring, minimalize, verification, oracle);
criterion_main!(benches);
