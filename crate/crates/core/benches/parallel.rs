//! Compares the data-parallel and sequential evaluation of the two
//! embarrassingly parallel workloads: the isometry pair sweep and the
//! character table rows.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::prelude::*;

use fockbridge::bridge::{check_pair, isometry_pairs};
use fockbridge::combinatorics::partitions_of;
use fockbridge::symm::mn_character;

fn bench_isometry_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("isometry_sweep");
    group.sample_size(10);
    for degree in [4u32, 6] {
        let pairs: Vec<_> = (0..=degree).flat_map(isometry_pairs).collect();
        group.bench_with_input(
            BenchmarkId::new("sequential", degree),
            &pairs,
            |b, pairs| {
                b.iter(|| pairs.iter().filter(|(x, y)| !check_pair(x, y)).count())
            },
        );
        group.bench_with_input(BenchmarkId::new("rayon", degree), &pairs, |b, pairs| {
            b.iter(|| pairs.par_iter().filter(|(x, y)| !check_pair(x, y)).count())
        });
    }
    group.finish();
}

fn bench_character_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("character_table");
    group.sample_size(10);
    for n in [6u32, 8] {
        let lambdas = partitions_of(n);
        let mus = partitions_of(n);
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, _| {
            b.iter(|| {
                lambdas
                    .iter()
                    .map(|l| {
                        mus.iter()
                            .map(|m| mn_character(l, m).unwrap())
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>()
            })
        });
        group.bench_with_input(BenchmarkId::new("rayon", n), &n, |b, _| {
            b.iter(|| {
                lambdas
                    .par_iter()
                    .map(|l| {
                        mus.iter()
                            .map(|m| mn_character(l, m).unwrap())
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_isometry_sweep, bench_character_table);
criterion_main!(benches);
