use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hallgh_core::hall;
use hallgh_core::specfun::OrderAlpha;
use hallgh_core::starlike::{HerglotzMeasure, StarlikeMap};

fn bench_i_angles(c: &mut Criterion) {
    let order = OrderAlpha::new(0.25).unwrap();
    c.bench_function("i_angles_interior", |b| {
        b.iter(|| hall::i_angles(black_box(1.0), black_box(2.0), order, 1e-9).unwrap())
    });
    c.bench_function("i_angles_corner", |b| {
        b.iter(|| hall::i_angles(black_box(1e-4), black_box(1e-4), order, 1e-9).unwrap())
    });
}

fn bench_g_gamma(c: &mut Criterion) {
    c.bench_function("g_gamma_mid", |b| {
        b.iter(|| hall::g_gamma(black_box(0.3), black_box(0.5), 1e-9).unwrap())
    });
}

fn bench_gh_ratio(c: &mut Criterion) {
    let map =
        StarlikeMap::new(HerglotzMeasure::sample(7, 4).unwrap(), OrderAlpha::new(0.3).unwrap());
    c.bench_function("gh_ratio", |b| {
        b.iter(|| map.gh_ratio(black_box(0.99), black_box(1.0)).unwrap())
    });
}

criterion_group!(benches, bench_i_angles, bench_g_gamma, bench_gh_ratio);
criterion_main!(benches);
