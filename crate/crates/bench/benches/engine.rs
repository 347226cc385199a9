use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use cyalg::cy::{self, AgenParams};
use cyalg::e6;
use cyalg::env;
use cyalg::heun;

fn rewriting(c: &mut Criterion) {
    let p = AgenParams::symbolic();
    c.bench_function("agen: normal form of C^2 B^2 A^2", |b| {
        b.iter(|| {
            // A fresh system each time so the memo tables start empty.
            let sys = cy::build_agen(&p).unwrap();
            black_box(sys.parse("C*C*B*B*A*A").unwrap())
        })
    });
    c.bench_function("agen: Casimir centrality", |b| {
        b.iter(|| black_box(cy::verify_omega_central(&p).unwrap()))
    });
    c.bench_function("sl3^2: polarised traces up to degree 4", |b| {
        b.iter(|| {
            let e = env::sl3_squared().unwrap();
            for spec in env::trace_specs(2, 4) {
                black_box(e.polarised_trace(&spec).unwrap());
            }
        })
    });
}

fn invariants(c: &mut Criterion) {
    let mut g = c.benchmark_group("e6");
    g.sample_size(10);
    g.bench_function("generate W(E6)", |b| {
        b.iter(|| black_box(e6::WeylGroup::generate().unwrap().order()))
    });
    let group = e6::e6_group();
    let p = e6::m_vars().parse("m1^2*m2 + m1'*m2''").unwrap();
    g.bench_function("orbit sum of a cubic", |b| {
        b.iter(|| black_box(e6::average(group, &p)))
    });
    g.finish();
}

fn heun_extraction(c: &mut Criterion) {
    c.bench_function("heun-racah: parameter extraction", |b| {
        b.iter(|| black_box(heun::verify_racah_closed_forms().unwrap()))
    });
}

criterion_group!(benches, rewriting, invariants, heun_extraction);
criterion_main!(benches);
