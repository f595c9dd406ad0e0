//! Self-checks: every fast routine against its oracle on random inputs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lcs::build;
use crate::multiply::{compose, compose_balanced, decompose, multiply_core};
use crate::oracle;
use crate::quasilocal::{Phase2Options, QuasiLocal};
use crate::score_mv::{mv_maxplus, ScoreVector};
use crate::seaweed::Permutation;
use crate::splice::solve;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Sizes up to 32.
    Quick,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub level: Level,
    pub seed: u64,
    /// Corrupt every product of the multiplication suite, to check that the
    /// harness notices.
    pub inject_multiply_fault: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            level: Level::Quick,
            seed: 0,
            inject_multiply_fault: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Sizes {
    max_len: usize,
    pairs: usize,
    exhaustive_n: usize,
    random_n: &'static [usize],
    random_pairs: usize,
}

fn sizes(level: Level) -> Sizes {
    match level {
        Level::Quick => Sizes {
            max_len: 32,
            pairs: 60,
            exhaustive_n: 3,
            random_n: &[8, 16, 32],
            random_pairs: 20,
        },
        Level::Full => Sizes {
            max_len: 64,
            pairs: 1000,
            exhaustive_n: 4,
            random_n: &[8, 16, 32, 64, 128, 256],
            random_pairs: 200,
        },
    }
}

/// Runs every suite and returns one report per suite.
pub fn run(opts: &VerifyOptions) -> Vec<SuiteReport> {
    let sz = sizes(opts.level);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    vec![
        multiply_suite(&mut rng, &sz, opts.inject_multiply_fault),
        build_suite(&mut rng, &sz),
        compose_suite(&mut rng, &sz),
        decompose_suite(&mut rng, &sz),
        dominance_suite(&mut rng, &sz),
        mv_suite(&mut rng, &sz),
        quasilocal_suite(&mut rng, &sz),
        splice_suite(&mut rng, &sz),
    ]
}

/// String over the first `sigma` lowercase letters, length drawn from `len`.
pub fn random_string(
    rng: &mut impl Rng,
    len: std::ops::RangeInclusive<usize>,
    sigma: u8,
) -> Vec<u8> {
    let len = rng.gen_range(len);
    (0..len).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut cols: Vec<usize> = (0..n).collect();
    cols.shuffle(rng);
    Permutation::from_cols(cols).expect("shuffle of 0..n")
}

/// Every permutation of `0..n`, in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::from_cols(cur.clone()).expect("permutation"));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

const ALPHABETS: [u8; 4] = [1, 2, 4, 20];

fn multiply_suite(rng: &mut ChaCha8Rng, sz: &Sizes, fault: bool) -> SuiteReport {
    let mut r = SuiteReport::new("multiply");
    let product = |p: &Permutation, q: &Permutation| {
        let c = multiply_core(p, q).expect("equal sizes");
        if fault && c.len() >= 2 {
            let mut cols = c.into_cols();
            cols.swap(0, 1);
            Permutation::from_cols(cols).unwrap()
        } else {
            c
        }
    };
    for n in 0..=sz.exhaustive_n {
        let all = all_permutations(n);
        for p in &all {
            for q in &all {
                let want = oracle::minplus(p, q).unwrap();
                r.check(product(p, q) == want, || format!("{p:?} x {q:?}"));
            }
        }
    }
    for &n in sz.random_n {
        for _ in 0..sz.random_pairs {
            let p = random_permutation(rng, n);
            let q = random_permutation(rng, n);
            let want = oracle::minplus(&p, &q).unwrap();
            r.check(product(&p, &q) == want, || format!("{p:?} x {q:?}"));
        }
    }
    r
}

fn build_suite(rng: &mut ChaCha8Rng, sz: &Sizes) -> SuiteReport {
    let mut r = SuiteReport::new("build");
    for t in 0..sz.pairs {
        let sigma = ALPHABETS[t % ALPHABETS.len()];
        let a = random_string(rng, 0..=sz.max_len, sigma);
        let b = random_string(rng, 0..=sz.max_len, sigma);
        let s = build(&a, &b);
        let table = oracle::all_substring_scores(&a, &b).unwrap();
        let ok = (0..=b.len())
            .all(|i| (i..=b.len()).all(|j| s.score_substring(i, j).unwrap() == table[i][j]));
        r.check(ok, || format!("a={a:?} b={b:?}"));
    }
    r
}

fn compose_suite(rng: &mut ChaCha8Rng, sz: &Sizes) -> SuiteReport {
    let mut r = SuiteReport::new("compose");
    let max = sz.max_len.min(16);
    for _ in 0..sz.pairs / 10 + 1 {
        let a = random_string(rng, 0..=max, 2);
        let b = random_string(rng, 0..=max, 2);
        let whole = build(&a, &b);
        for cut in 0..=a.len() {
            let c = compose(&build(&a[..cut], &b), &build(&a[cut..], &b)).unwrap();
            r.check(c == whole, || format!("a={a:?} b={b:?} cut={cut}"));
        }
    }
    for t in 0..sz.pairs / 2 + 1 {
        let sigma = ALPHABETS[t % ALPHABETS.len()];
        let b = random_string(rng, 0..=sz.max_len, sigma);
        let x = random_string(rng, 0..=sz.max_len, sigma);
        let y = random_string(rng, 0..=sz.max_len / 4, sigma);
        let (sx, sy) = (build(&x, &b), build(&y, &b));
        let (p, q) = if t % 2 == 0 { (&sx, &sy) } else { (&sy, &sx) };
        let ok = compose_balanced(p, q).unwrap() == compose(p, q).unwrap();
        r.check(ok, || format!("b={b:?} x={x:?} y={y:?}"));
    }
    r
}

fn decompose_suite(rng: &mut ChaCha8Rng, sz: &Sizes) -> SuiteReport {
    let mut r = SuiteReport::new("decompose");
    for t in 0..sz.pairs / 10 + 1 {
        let sigma = ALPHABETS[t % ALPHABETS.len()];
        let a = random_string(rng, 1..=16.min(sz.max_len), sigma);
        let b = random_string(rng, 0..=sz.max_len * 2, sigma);
        let s = build(&a, &b);
        let chain = decompose(&s);
        let ok = chain.factors.iter().all(|f| f.window_len() <= 2 * a.len())
            && oracle::fold_factors(&chain).is_ok_and(|p| p == s.permutation());
        r.check(ok, || format!("a={a:?} b={b:?}"));
    }
    r
}

fn dominance_suite(rng: &mut ChaCha8Rng, sz: &Sizes) -> SuiteReport {
    let mut r = SuiteReport::new("dominance");
    for _ in 0..sz.pairs / 10 + 1 {
        let a = random_string(rng, 0..=sz.max_len, 4);
        let b = random_string(rng, 0..=sz.max_len, 4);
        let s = build(&a, &b);
        let counter = s.counter();
        let (p, n) = (s.depth() as i64, s.width() as i64);
        for _ in 0..50 {
            let i = rng.gen_range(-p..=n);
            let j = rng.gen_range(0..=n + p);
            r.check(counter.count(i, j) == s.dominance(i, j), || {
                format!("a={a:?} b={b:?} ({i}, {j})")
            });
        }
    }
    r
}

pub fn random_score_vector(rng: &mut impl Rng, n: usize) -> ScoreVector {
    let mut v = vec![rng.gen_range(0..4usize)];
    for _ in 0..n {
        let last = *v.last().unwrap();
        v.push(last + usize::from(rng.gen_bool(0.5)));
    }
    ScoreVector::new(v).expect("unit steps")
}

fn mv_suite(rng: &mut ChaCha8Rng, sz: &Sizes) -> SuiteReport {
    let mut r = SuiteReport::new("mv");
    for t in 0..sz.pairs / 2 + 1 {
        let sigma = ALPHABETS[t % ALPHABETS.len()];
        let a = random_string(rng, 0..=sz.max_len, sigma);
        let b = random_string(rng, 0..=sz.max_len, sigma);
        let x = random_score_vector(rng, b.len());
        let got = mv_maxplus(&build(&a, &b), &x).unwrap();
        let want = oracle::mv(&a, &b, x.as_slice()).unwrap();
        r.check(got.as_slice() == want, || {
            format!("a={a:?} b={b:?} x={x:?}")
        });
    }
    r
}

pub fn random_intervals(rng: &mut impl Rng, m: usize, k: usize) -> Vec<(usize, usize)> {
    (0..k)
        .filter_map(|_| {
            let x = rng.gen_range(0..=m);
            let y = rng.gen_range(0..=m);
            (x != y).then(|| (x.min(y), x.max(y)))
        })
        .collect()
}

fn quasilocal_suite(rng: &mut ChaCha8Rng, sz: &Sizes) -> SuiteReport {
    let mut r = SuiteReport::new("quasilocal");
    for t in 0..sz.pairs / 10 + 1 {
        let sigma = ALPHABETS[t % ALPHABETS.len()];
        let m = rng.gen_range(1..=sz.max_len);
        let a = random_string(rng, m..=m, sigma);
        let b = random_string(rng, 0..=sz.max_len, sigma);
        let k = rng.gen_range(0..=m);
        let iv = random_intervals(rng, m, k);
        let pruned = QuasiLocal::compute(&a, &b, &iv).unwrap();
        let full = QuasiLocal::compute_with(
            &a,
            &b,
            &iv,
            Phase2Options {
                prune: false,
                ..Default::default()
            },
        )
        .unwrap();
        for &(lo, hi) in &iv {
            let want = build(&a[lo..hi], &b);
            let ok = pruned.matrix(lo, hi).is_ok_and(|s| *s == want)
                && full.matrix(lo, hi).is_ok_and(|s| *s == want);
            r.check(ok, || format!("a={a:?} b={b:?} [{lo}, {hi})"));
        }
    }
    r
}

fn splice_suite(rng: &mut ChaCha8Rng, sz: &Sizes) -> SuiteReport {
    let mut r = SuiteReport::new("splice");
    let max = sz.max_len.min(48);
    for t in 0..sz.pairs / 5 + 1 {
        let sigma = ALPHABETS[t % ALPHABETS.len()];
        let m = rng.gen_range(0..=max);
        let a = random_string(rng, m..=m, sigma);
        let b = random_string(rng, 0..=max, sigma);
        let small = t % 2 == 0;
        let k = if small {
            rng.gen_range(0..=8)
        } else {
            rng.gen_range(0..=m)
        };
        let iv = random_intervals(rng, m, k);
        let chain = solve(&a, &b, &iv).unwrap();
        let want = if small {
            oracle::chain_enumeration(&a, &b, &iv)
        } else {
            oracle::chain_dp(&a, &b, &iv)
        };
        r.check(chain.score == want && chain.certify(&a, &b), || {
            format!("a={a:?} b={b:?} intervals={iv:?}")
        });
    }
    r
}
