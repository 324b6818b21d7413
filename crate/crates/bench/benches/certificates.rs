use criterion::{criterion_group, criterion_main, Criterion};
use evenset_core::engine::derive_all;
use evenset_core::surface::sextic_dim_certificate;

fn certificates(c: &mut Criterion) {
    c.bench_function("derive_all", |b| b.iter(derive_all));
    let certs = derive_all();
    c.bench_function("validate_all", |b| {
        b.iter(|| {
            certs
                .iter()
                .map(|c| c.validate().unwrap().verified)
                .sum::<usize>()
        })
    });
    c.bench_function("sextic_certificate", |b| b.iter(sextic_dim_certificate));
}

criterion_group!(benches, certificates);
criterion_main!(benches);
