//! Benchmarks for the two performance-sensitive engines: the skeleton
//! enumeration with canonical-form deduplication, and coset enumeration.

use criterion::{criterion_group, criterion_main, Criterion};
use sextic_core::catalog;
use sextic_core::enumeration::{enumerate_curve_classes, generate_maps};
use sextic_core::fpgroup::{coset_enumerate, TcOptions, Word};
use sextic_core::rows::{abelianization_kernel_table, presentation_for};

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("generate_maps v3=8", |b| {
        b.iter(|| generate_maps(std::hint::black_box(8), 0).len())
    });
    c.bench_function("enumerate_curve_classes", |b| {
        b.iter(|| enumerate_curve_classes().len())
    });
}

fn bench_coset(c: &mut Criterion) {
    let p720 = presentation_for(catalog::row("T1-05").unwrap())
        .unwrap()
        .presentation;
    c.bench_function("coset order 720", |b| {
        b.iter(|| {
            coset_enumerate(&p720, &[], TcOptions::default())
                .unwrap()
                .index
        })
    });
    let p7680 = presentation_for(catalog::row("T1-09").unwrap())
        .unwrap()
        .presentation
        .quotient(&[Word::gen(1).pow(5)]);
    c.bench_function("coset order 7680", |b| {
        b.iter(|| {
            coset_enumerate(&p7680, &[], TcOptions::default())
                .unwrap()
                .index
        })
    });
}

fn bench_commutant(c: &mut Criterion) {
    let p = presentation_for(catalog::row("T1-13").unwrap())
        .unwrap()
        .presentation;
    c.bench_function("kernel table + Reidemeister-Schreier", |b| {
        b.iter(|| {
            let t = abelianization_kernel_table(&p).unwrap();
            sextic_core::fpgroup::reidemeister_schreier(&p, &t)
                .unwrap()
                .presentation
                .gens
        })
    });
}

criterion_group!(benches, bench_enumeration, bench_coset, bench_commutant);
criterion_main!(benches);
