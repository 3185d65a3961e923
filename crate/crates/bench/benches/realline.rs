use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use pointfree::realline::{lemma1_term, prop2_witness, KRealPair};
use pointfree_bench::regular_opens;

fn terms(c: &mut Criterion) {
    let sets = regular_opens(1, 32);
    c.bench_function("lemma1_term n=1..20", |b| {
        b.iter(|| {
            for u in &sets {
                for n in 1..=20 {
                    black_box(lemma1_term(u, n).unwrap());
                }
            }
        })
    });
    c.bench_function("regularize", |b| {
        b.iter(|| {
            for u in &sets {
                black_box(u.union(&sets[0]).regularize());
            }
        })
    });
}

fn witnesses(c: &mut Criterion) {
    let vs = regular_opens(2, 16);
    let ws = regular_opens(3, 16);
    let pairs: Vec<KRealPair> = vs
        .iter()
        .zip(&ws)
        .map(|(v, w)| KRealPair::new(v.intersect(w), v.clone()).unwrap())
        .collect();
    c.bench_function("prop2_witness n=1..20", |b| {
        b.iter(|| {
            for p in &pairs {
                for n in 1..=20 {
                    black_box(prop2_witness(p, n).unwrap());
                }
            }
        })
    });
}

criterion_group!(benches, terms, witnesses);
criterion_main!(benches);
