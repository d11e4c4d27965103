use criterion::{criterion_group, criterion_main, Criterion};
use homyb::{parse_scalar, ParamSet, Verifier};
use homyb_bench::{h4_operator, h4_system};
use std::hint::black_box;

fn scalar_mul(c: &mut Criterion) {
    let p = ParamSet::new(["lam", "nu", "kk"]).unwrap();
    let a = parse_scalar("lam^2*kk - 3/4*nu + kk^-1*lam + 2", &p).unwrap();
    let b = parse_scalar("nu^3 - lam*kk + 5/7", &p).unwrap();
    c.bench_function("scalar mul", |bch| bch.iter(|| black_box(&a) * black_box(&b)));
}

fn kron(c: &mut Criterion) {
    let (op, alpha) = h4_operator();
    c.bench_function("kron 16x16 by 4x4", |bch| {
        bch.iter(|| black_box(&op.matrix).kron(black_box(&alpha)).unwrap())
    });
}

fn hybe(c: &mut Criterion) {
    let (op, alpha) = h4_operator();
    let v = Verifier::default();
    c.bench_function("hybe_holds dim 4", |bch| {
        bch.iter(|| v.hybe_holds(black_box(&op.matrix), black_box(&alpha)).unwrap())
    });
}

fn system(c: &mut Criterion) {
    let (t, alpha) = h4_system();
    let v = Verifier::default();
    let mut g = c.benchmark_group("system");
    g.sample_size(10);
    g.bench_function("system_holds dim 4", |bch| {
        bch.iter(|| v.system_triple_holds(black_box(&t), black_box(&alpha)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, scalar_mul, kron, hybe, system);
criterion_main!(benches);
