//! Criterion benchmarks for the hot kernels: family membership, the
//! norm search, maximal-set decomposition, and the p = 1 analysis.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

use schreier_core::family::{decompose_maximal, enumerate, is_maximal, is_member};
use schreier_core::gen::{random_vector, SphereSampler};
use schreier_core::norm::{norm, norming_sets, Exponent};
use schreier_core::one_sets;
use schreier_core::oracle::member_bruteforce;
use schreier_core::{FinSet, Ordinal};

fn ord(s: &str) -> Ordinal {
    s.parse().unwrap()
}

fn bench_membership(c: &mut Criterion) {
    let mut group = c.benchmark_group("membership");
    let cases: Vec<(&str, &str, FinSet)> = vec![
        ("s1_small", "1", FinSet::new(vec![3, 5, 8]).unwrap()),
        ("s2_mid", "2", FinSet::new((2..=12).collect()).unwrap()),
        ("s3_wide", "3", FinSet::new((3..=14).collect()).unwrap()),
        ("w2_tail", "w*2", FinSet::new((6..=16).collect()).unwrap()),
    ];
    for (name, alpha, f) in &cases {
        let alpha = ord(alpha);
        group.bench_function(*name, |b| {
            b.iter(|| is_member(black_box(f), black_box(alpha)))
        });
    }
    group.bench_function("oracle_s2_mid", |b| {
        let f = FinSet::new((2..=12).collect()).unwrap();
        b.iter(|| member_bruteforce(black_box(&f), ord("2")))
    });
    group.finish();
}

fn bench_norm(c: &mut Criterion) {
    let mut group = c.benchmark_group("norm");
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let p1 = Exponent::Exact(1);
    let p2 = Exponent::Exact(2);
    for (name, support) in [("support_8", 8usize), ("support_12", 12), ("support_16", 16)] {
        let vectors: Vec<_> = (0..32)
            .map(|_| random_vector(&mut rng, support as u32 + 2, support, 20))
            .collect();
        group.bench_function(format!("{name}_p1"), |b| {
            let mut k = 0;
            b.iter_batched(
                || {
                    k = (k + 1) % vectors.len();
                    &vectors[k]
                },
                |x| norm(black_box(x), ord("2"), &p1),
                BatchSize::SmallInput,
            )
        });
        group.bench_function(format!("{name}_p2"), |b| {
            let mut k = 0;
            b.iter_batched(
                || {
                    k = (k + 1) % vectors.len();
                    &vectors[k]
                },
                |x| norm(black_box(x), ord("2"), &p2),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

fn bench_structure(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure");
    let maximal: Vec<FinSet> = enumerate(ord("2"), 12)
        .unwrap()
        .into_iter()
        .filter(|f| !f.is_empty() && is_maximal(f, ord("2")).unwrap_or(false))
        .collect();
    group.bench_function("decompose_maximal_s2", |b| {
        let mut k = 0;
        b.iter_batched(
            || {
                k = (k + 1) % maximal.len();
                &maximal[k]
            },
            |g| decompose_maximal(black_box(g), ord("2")),
            BatchSize::SmallInput,
        )
    });

    let sampler = SphereSampler::new(ord("1"), 12).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let sphere: Vec<_> = (0..32).map(|_| sampler.sample(&mut rng, 1)).collect();
    group.bench_function("one_set_report", |b| {
        let mut k = 0;
        b.iter_batched(
            || {
                k = (k + 1) % sphere.len();
                &sphere[k]
            },
            |x| one_sets::report(black_box(x), ord("1")),
            BatchSize::SmallInput,
        )
    });
    group.bench_function("norming_sets_sphere", |b| {
        let mut k = 0;
        b.iter_batched(
            || {
                k = (k + 1) % sphere.len();
                &sphere[k]
            },
            |x| norming_sets(black_box(x), ord("1"), &Exponent::Exact(1)),
            BatchSize::SmallInput,
        )
    });
    group.finish();
}

criterion_group!(benches, bench_membership, bench_norm, bench_structure);
criterion_main!(benches);
