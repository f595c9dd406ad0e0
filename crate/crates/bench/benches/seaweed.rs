use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seaweed::gen::{generate, GenConfig};
use seaweed::{build, compose, compose_balanced, multiply_core, solve, Permutation};

fn permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut cols: Vec<usize> = (0..n).collect();
    cols.shuffle(rng);
    Permutation::from_cols(cols).unwrap()
}

fn dna(rng: &mut ChaCha8Rng, len: usize) -> Vec<u8> {
    (0..len).map(|_| b"acgt"[rng.gen_range(0..4)]).collect()
}

fn multiply(c: &mut Criterion) {
    let mut g = c.benchmark_group("multiply_core");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [1 << 10, 1 << 12, 1 << 14] {
        let (p, q) = (permutation(&mut rng, n), permutation(&mut rng, n));
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |bch, _| {
            bch.iter(|| multiply_core(&p, &q).unwrap())
        });
    }
    g.finish();
}

fn composition(c: &mut Criterion) {
    let mut g = c.benchmark_group("compose");
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let b = dna(&mut rng, 4096);
    let deep = build(&dna(&mut rng, 1024), &b);
    for shallow_len in [4, 32, 256] {
        let shallow = build(&dna(&mut rng, shallow_len), &b);
        g.bench_with_input(
            BenchmarkId::new("plain", shallow_len),
            &shallow_len,
            |bch, _| bch.iter(|| compose(&deep, &shallow).unwrap()),
        );
        g.bench_with_input(
            BenchmarkId::new("balanced", shallow_len),
            &shallow_len,
            |bch, _| bch.iter(|| compose_balanced(&deep, &shallow).unwrap()),
        );
    }
    g.finish();
}

fn spliced(c: &mut Criterion) {
    let mut g = c.benchmark_group("solve");
    g.sample_size(10);
    for n in [128, 256, 512] {
        let inst = generate(&GenConfig {
            m: n,
            n,
            k: n,
            alphabet: b"acgt".to_vec(),
            seed: 3,
            plant: true,
        })
        .unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |bch, _| {
            bch.iter(|| solve(&inst.a, &inst.b, &inst.exons).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, multiply, composition, spliced);
criterion_main!(benches);
