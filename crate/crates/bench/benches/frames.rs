use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use pointfree::separation::{check_ppt_theorem, is_symmetric};
use pointfree::sublocale::{all_sublocales, sc_frame};
use pointfree::Budget;
use pointfree_bench::frames;

fn sublocales(c: &mut Criterion) {
    let budget = Budget::default();
    let mut group = c.benchmark_group("sublocales");
    for f in frames().iter().filter(|f| f.frame.size() >= 6) {
        group.bench_with_input(
            BenchmarkId::from_parameter(&f.name),
            &f.frame,
            |b, frame| b.iter(|| all_sublocales(black_box(frame), &budget).unwrap().len()),
        );
    }
    group.finish();
}

fn sc_and_axioms(c: &mut Criterion) {
    let budget = Budget::default();
    let mut group = c.benchmark_group("separation");
    for f in frames().iter().filter(|f| f.frame.size() >= 6) {
        group.bench_with_input(BenchmarkId::new("sc", &f.name), &f.frame, |b, frame| {
            b.iter(|| sc_frame(black_box(frame)).unwrap().len())
        });
        group.bench_with_input(
            BenchmarkId::new("symmetric", &f.name),
            &f.frame,
            |b, frame| b.iter(|| is_symmetric(black_box(frame)).unwrap().holds()),
        );
        group.bench_with_input(BenchmarkId::new("ppt", &f.name), &f.frame, |b, frame| {
            b.iter(|| {
                check_ppt_theorem(black_box(frame), &budget)
                    .unwrap()
                    .consistent()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, sublocales, sc_and_axioms);
criterion_main!(benches);
