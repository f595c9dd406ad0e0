//! Seeded random instances for spliced alignment.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so the same
//! configuration always yields the same instance.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quasilocal::PAD;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenConfig {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub alphabet: Vec<u8>,
    pub seed: u64,
    pub plant: bool,
}

/// A chain of exons copied verbatim, in order, into `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Planted {
    /// Inclusive 1-based exon endpoints.
    pub chain: Vec<(usize, usize)>,
    /// Total length of the planted exons: a lower bound on the best score.
    pub total_length: usize,
    /// 0-based start of each copy in `b`.
    pub offsets: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub a: Vec<u8>,
    pub b: Vec<u8>,
    /// Half-open, sorted, distinct.
    pub exons: Vec<(usize, usize)>,
    pub planted: Option<Planted>,
}

impl Instance {
    pub fn exons_one_based(&self) -> Vec<(usize, usize)> {
        self.exons.iter().map(|&(lo, hi)| (lo + 1, hi)).collect()
    }
}

pub fn max_exons(m: usize) -> usize {
    m * (m + 1) / 2
}

pub fn generate(cfg: &GenConfig) -> Result<Instance> {
    if cfg.alphabet.is_empty() {
        return Err(Error::Invalid("alphabet is empty".into()));
    }
    if cfg.alphabet.contains(&PAD) {
        return Err(Error::ReservedByte(PAD));
    }
    if cfg.k > max_exons(cfg.m) {
        return Err(Error::Invalid(format!(
            "k = {} exceeds the {} distinct intervals of a string of length {}",
            cfg.k,
            max_exons(cfg.m),
            cfg.m
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let a = random_string(&mut rng, cfg.m, &cfg.alphabet);
    let mut b = random_string(&mut rng, cfg.n, &cfg.alphabet);

    let mut chosen: HashSet<(usize, usize)> = HashSet::new();
    let planted = if cfg.plant && cfg.k > 0 && cfg.m > 0 {
        let chain = planted_chain(&mut rng, cfg.m, cfg.n, cfg.k);
        let offsets = embed(&mut rng, &a, &mut b, &chain);
        chosen.extend(chain.iter().copied());
        Some(Planted {
            total_length: chain.iter().map(|&(lo, hi)| hi - lo).sum(),
            chain: chain.iter().map(|&(lo, hi)| (lo + 1, hi)).collect(),
            offsets,
        })
    } else {
        None
    };
    fill_intervals(&mut rng, cfg.m, cfg.k, &mut chosen);
    let mut exons: Vec<_> = chosen.into_iter().collect();
    exons.sort_unstable();
    Ok(Instance {
        a,
        b,
        exons,
        planted,
    })
}

fn random_string(rng: &mut ChaCha8Rng, len: usize, alphabet: &[u8]) -> Vec<u8> {
    (0..len)
        .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
        .collect()
}

/// Disjoint, ordered, non-empty intervals of `a` with total length `<= n`.
fn planted_chain(rng: &mut ChaCha8Rng, m: usize, n: usize, k: usize) -> Vec<(usize, usize)> {
    let t = rng.gen_range(1..=k.min(8).min(m.div_ceil(2)));
    let mut cuts: Vec<usize> = rand::seq::index::sample(rng, m + 1, 2 * t).into_vec();
    cuts.sort_unstable();
    let mut chain: Vec<(usize, usize)> = cuts.chunks(2).map(|c| (c[0], c[1])).collect();
    let mut total: usize = chain.iter().map(|&(lo, hi)| hi - lo).sum();
    while total > n {
        let (lo, hi) = chain.pop().unwrap();
        total -= hi - lo;
    }
    chain
}

/// Overwrites `b` with the chain's substrings in order, separated by random
/// gaps. Returns the start of each copy.
fn embed(rng: &mut ChaCha8Rng, a: &[u8], b: &mut [u8], chain: &[(usize, usize)]) -> Vec<usize> {
    let total: usize = chain.iter().map(|&(lo, hi)| hi - lo).sum();
    let slack = b.len() - total;
    let mut gaps: Vec<usize> = (0..chain.len()).map(|_| rng.gen_range(0..=slack)).collect();
    gaps.sort_unstable();
    let mut offsets = Vec::with_capacity(chain.len());
    let mut used = 0;
    for (&(lo, hi), &gap) in chain.iter().zip(&gaps) {
        let at = used + gap;
        b[at..at + hi - lo].copy_from_slice(&a[lo..hi]);
        offsets.push(at);
        used += hi - lo;
    }
    offsets
}

fn fill_intervals(rng: &mut ChaCha8Rng, m: usize, k: usize, chosen: &mut HashSet<(usize, usize)>) {
    if chosen.len() >= k {
        return;
    }
    if 2 * k > max_exons(m) {
        let mut all: Vec<(usize, usize)> = (0..m)
            .flat_map(|lo| (lo + 1..=m).map(move |hi| (lo, hi)))
            .filter(|iv| !chosen.contains(iv))
            .collect();
        all.shuffle(rng);
        let need = k - chosen.len();
        chosen.extend(all.into_iter().take(need));
        return;
    }
    while chosen.len() < k {
        let x = rng.gen_range(0..=m);
        let y = rng.gen_range(0..=m);
        if x != y {
            chosen.insert((x.min(y), x.max(y)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(m: usize, n: usize, k: usize, seed: u64, plant: bool) -> GenConfig {
        GenConfig {
            m,
            n,
            k,
            alphabet: b"acgt".to_vec(),
            seed,
            plant,
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let x = generate(&cfg(40, 50, 30, 9, true)).unwrap();
        let y = generate(&cfg(40, 50, 30, 9, true)).unwrap();
        assert_eq!(x, y);
        let z = generate(&cfg(40, 50, 30, 10, true)).unwrap();
        assert_ne!(x, z);
    }

    #[test]
    fn counts_and_bounds() {
        for (m, k) in [(5, 15), (5, 0), (10, 3), (10, 50), (0, 0)] {
            let inst = generate(&cfg(m, 7, k, 1, false)).unwrap();
            assert_eq!(inst.exons.len(), k);
            assert!(inst.exons.iter().all(|&(lo, hi)| lo < hi && hi <= m));
            assert_eq!(inst.a.len(), m);
            assert_eq!(inst.b.len(), 7);
        }
        assert!(generate(&cfg(5, 7, 16, 1, false)).is_err());
    }

    #[test]
    fn planted_chain_is_copied_into_b() {
        for seed in 0..20 {
            let inst = generate(&cfg(30, 25, 20, seed, true)).unwrap();
            let p = inst.planted.as_ref().unwrap();
            assert!(p.total_length <= 25);
            for (&(i, j), &at) in p.chain.iter().zip(&p.offsets) {
                assert_eq!(&inst.b[at..at + j - i + 1], &inst.a[i - 1..j]);
                assert!(inst.exons.contains(&(i - 1, j)));
            }
            assert!(p.chain.windows(2).all(|w| w[0].1 < w[1].0));
            assert!(p.offsets.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
