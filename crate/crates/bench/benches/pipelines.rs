use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use deltastar_bench::{kernel_example, presented_example, wide_example};
use deltastar_core::monoid::{dc_lattice_affine, delta_star_affine, delta_star_presentation};
use deltastar_core::{enumerate_faces, hilbert_basis, hnf, snf, DiophantineSystem, Int, IntMatrix};

fn bench_normal_forms(c: &mut Criterion) {
    let m = IntMatrix::from_i64_rows(&[
        vec![12, -7, 3, 5, -1, 9],
        vec![0, 4, -8, 2, 6, -3],
        vec![7, 7, 1, -5, 2, 2],
        vec![-9, 3, 0, 8, -4, 1],
        vec![5, -2, 6, -6, 3, 0],
        vec![1, 10, -3, 4, -2, 7],
    ]);
    c.bench_function("hnf 6x6", |b| b.iter(|| hnf(black_box(&m))));
    c.bench_function("snf 6x6", |b| b.iter(|| snf(black_box(&m))));
}

fn bench_hilbert_basis(c: &mut Criterion) {
    let mut sys = DiophantineSystem::new(4);
    sys.add_equality(vec![
        Int::from(1),
        Int::from(2),
        Int::from(-3),
        Int::from(-1),
    ])
    .unwrap();
    sys.add_congruence(
        vec![Int::from(1), Int::from(0), Int::from(1), Int::from(0)],
        Int::from(3),
    )
    .unwrap();
    c.bench_function("hilbert basis (1 equality, 1 congruence)", |b| {
        b.iter(|| hilbert_basis(black_box(&sys)))
    });
}

fn bench_cone_pipeline(c: &mut Criterion) {
    let wide = wide_example();
    c.bench_function("face lattice, 9 generators in N^3", |b| {
        b.iter(|| enumerate_faces(black_box(&wide.cone())))
    });
    c.bench_function("dc lattice, 9 generators in N^3", |b| {
        b.iter(|| dc_lattice_affine(black_box(&wide)))
    });
}

fn bench_delta_star(c: &mut Criterion) {
    let kernel = kernel_example();
    c.bench_function("delta star, affine 5 generators", |b| {
        b.iter(|| delta_star_affine(black_box(&kernel)).unwrap())
    });
    let pres = presented_example();
    c.bench_function("delta star, presented monoid", |b| {
        b.iter(|| delta_star_presentation(black_box(&pres)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_normal_forms,
    bench_hilbert_basis,
    bench_cone_pipeline,
    bench_delta_star
);
criterion_main!(benches);
