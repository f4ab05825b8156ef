use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use cyclic_derangements::analysis::{default_tolerance, isolate_roots, verify_interlacing};
use cyclic_derangements::counting::{
    d_bruteforce, d_formula, eulerian_egf, exc_derangement_egf, exc_derangement_table,
    qt_bruteforce, qt_formula,
};
use cyclic_derangements::DEFAULT_ENUMERATION_BOUND;

fn counting(c: &mut Criterion) {
    let mut g = c.benchmark_group("count");
    for (r, n) in [(2, 6), (3, 5), (4, 5)] {
        let id = format!("r{r}n{n}");
        g.bench_with_input(BenchmarkId::new("formula", &id), &(r, n), |b, &(r, n)| {
            b.iter(|| d_formula(black_box(r), black_box(n)).unwrap())
        });
        g.bench_with_input(
            BenchmarkId::new("enumeration", &id),
            &(r, n),
            |b, &(r, n)| {
                b.iter(|| {
                    d_bruteforce(black_box(r), black_box(n), DEFAULT_ENUMERATION_BOUND).unwrap()
                })
            },
        );
    }
    g.finish();
}

fn qt(c: &mut Criterion) {
    let mut g = c.benchmark_group("qt");
    g.sample_size(20);
    for (r, n) in [(2, 5), (3, 4)] {
        let id = format!("r{r}n{n}");
        g.bench_with_input(BenchmarkId::new("formula", &id), &(r, n), |b, &(r, n)| {
            b.iter(|| qt_formula(black_box(r), black_box(n)).unwrap())
        });
        g.bench_with_input(
            BenchmarkId::new("enumeration", &id),
            &(r, n),
            |b, &(r, n)| {
                b.iter(|| {
                    qt_bruteforce(black_box(r), black_box(n), DEFAULT_ENUMERATION_BOUND).unwrap()
                })
            },
        );
    }
    g.finish();
}

fn roots(c: &mut Criterion) {
    let table = exc_derangement_table(4, 9);
    let d8 = table[8].to_rat_poly().unwrap();
    let d9 = table[9].to_rat_poly().unwrap();
    let tol = default_tolerance();
    let mut g = c.benchmark_group("roots");
    g.sample_size(20);
    g.bench_function("isolate-r4n8", |b| {
        b.iter(|| isolate_roots(black_box(&d8), &tol).unwrap())
    });
    g.bench_function("interlace-r4n8", |b| {
        b.iter(|| verify_interlacing(black_box(&d8), black_box(&d9)).unwrap())
    });
    g.finish();
}

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("egf");
    g.sample_size(10);
    g.bench_function("exc-derangements-r3-order8", |b| {
        b.iter(|| exc_derangement_egf(black_box(3), 8).unwrap())
    });
    g.bench_function("eulerian-r3-order8", |b| {
        b.iter(|| eulerian_egf(black_box(3), 8).unwrap())
    });
    g.finish();
}

criterion_group!(benches, counting, qt, roots, series);
criterion_main!(benches);
