use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hallgh_core::quadrature::{integrate_finite, integrate_halfline, SingularitySpec};

fn bench_finite_smooth(c: &mut Criterion) {
    c.bench_function("finite_smooth_cos", |b| {
        b.iter(|| {
            integrate_finite(|x| black_box(x).cos(), 0.0, 1.0, SingularitySpec::NONE, 1e-10)
                .unwrap()
        })
    });
}

fn bench_finite_endpoint_singularity(c: &mut Criterion) {
    c.bench_function("finite_inverse_sqrt", |b| {
        b.iter(|| {
            integrate_finite(
                |x| black_box(x).powf(-0.5),
                0.0,
                1.0,
                SingularitySpec::left(-0.5).unwrap(),
                1e-10,
            )
            .unwrap()
        })
    });
}

fn bench_halfline(c: &mut Criterion) {
    c.bench_function("halfline_decay", |b| {
        b.iter(|| integrate_halfline(|w| (-black_box(w)).exp() / w.sqrt(), -0.5, 1e-10).unwrap())
    });
}

criterion_group!(benches, bench_finite_smooth, bench_finite_endpoint_singularity, bench_halfline);
criterion_main!(benches);
