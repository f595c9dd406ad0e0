//! Sparse spliced alignment: the best chain of candidate exons of `a`
//! against a reference `b`.
//!
//! Intervals are half-open `(lo, hi)` for `a[lo..hi]` throughout; use
//! [`ExonDag::from_one_based`] for inclusive 1-based input.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle;
use crate::quasilocal::{IntervalStore, QuasiLocal};
use crate::score_mv::{column_scores, mv_maxplus, ScoreVector};

/// Candidate exons as edges `lo -> hi` over the nodes `0..=m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExonDag {
    m: usize,
    n: usize,
    edges: Vec<(usize, usize)>,
    incoming: Vec<Vec<usize>>,
}

impl ExonDag {
    pub fn new(
        m: usize,
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
        if let Some(&(lo, hi)) = edges.iter().find(|&&(lo, hi)| lo >= hi || hi > m) {
            return Err(Error::InvalidInterval { lo, hi, len: m });
        }
        edges.sort_unstable();
        edges.dedup();
        let mut incoming = vec![Vec::new(); m + 1];
        for &(lo, hi) in &edges {
            incoming[hi].push(lo);
        }
        Ok(ExonDag {
            m,
            n,
            edges,
            incoming,
        })
    }

    /// Exons given as inclusive 1-based `(i, j)`, i.e. `a[i-1..j]`.
    pub fn from_one_based(m: usize, n: usize, exons: &[(usize, usize)]) -> Result<Self> {
        if let Some(&(i, j)) = exons.iter().find(|&&(i, j)| i == 0 || i > j || j > m) {
            return Err(Error::InvalidInterval {
                lo: i,
                hi: j,
                len: m,
            });
        }
        Self::new(m, n, exons.iter().map(|&(i, j)| (i - 1, j)))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distinct edges, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Start nodes of the edges ending at `hi`, increasing.
    pub fn incoming(&self, hi: usize) -> &[usize] {
        &self.incoming[hi]
    }
}

/// A chain of exons, each ending at or before the next one starts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub intervals: Vec<(usize, usize)>,
    pub score: usize,
}

impl Chain {
    pub fn is_feasible(&self) -> bool {
        self.intervals.iter().all(|&(lo, hi)| lo < hi)
            && self.intervals.windows(2).all(|w| w[0].1 <= w[1].0)
    }

    pub fn concatenation(&self, a: &[u8]) -> Vec<u8> {
        self.intervals
            .iter()
            .flat_map(|&(lo, hi)| a[lo..hi].iter().copied())
            .collect()
    }

    /// Inclusive 1-based endpoints.
    pub fn one_based(&self) -> Vec<(usize, usize)> {
        self.intervals
            .iter()
            .map(|&(lo, hi)| (lo + 1, hi))
            .collect()
    }

    /// Checks feasibility and that the score is the LCS of the spliced
    /// string against `b`.
    pub fn certify(&self, a: &[u8], b: &[u8]) -> bool {
        self.is_feasible()
            && self.intervals.iter().all(|&(_, hi)| hi <= a.len())
            && oracle::lcs(&self.concatenation(a), b) == self.score
    }
}

/// `s[j]` holds, for every prefix of `b`, the best chain score using only
/// exons inside `a[..j]`.
pub fn forward_dp(dag: &ExonDag, store: &IntervalStore) -> Result<Vec<ScoreVector>> {
    if store.width() != dag.n() {
        return Err(Error::SizeMismatch {
            left: dag.n(),
            right: store.width(),
        });
    }
    let mut s = Vec::with_capacity(dag.m() + 1);
    s.push(ScoreVector::zeros(dag.n()));
    for j in 1..=dag.m() {
        let products: Vec<ScoreVector> = dag
            .incoming(j)
            .par_iter()
            .map(|&lo| mv_maxplus(store.matrix(lo, j)?, &s[lo]))
            .collect::<Result<_>>()?;
        let mut row = s[j - 1].clone();
        for y in &products {
            row.max_assign(y);
        }
        s.push(row);
    }
    Ok(s)
}

/// Walks back from `(m, n)`. At each node it prefers skipping a position
/// of `a`, then the edge with the smallest start, then the smallest split
/// point in `b`.
pub fn traceback(dag: &ExonDag, store: &IntervalStore, s: &[ScoreVector]) -> Result<Chain> {
    let (mut j, mut k) = (dag.m(), dag.n());
    let score = s[j][k];
    let mut intervals = Vec::new();
    while j > 0 {
        let target = s[j][k];
        if target == s[j - 1][k] {
            j -= 1;
            continue;
        }
        let mut step = None;
        for &lo in dag.incoming(j) {
            let col = column_scores(store.matrix(lo, j)?, k);
            if let Some(split) = (0..=k).find(|&jp| s[lo][jp] + col[jp] == target) {
                step = Some((lo, split));
                break;
            }
        }
        let (lo, split) = step.ok_or_else(|| {
            Error::Invalid(format!(
                "no move certifies score {target} at node {j}, column {k}"
            ))
        })?;
        intervals.push((lo, j));
        j = lo;
        k = split;
    }
    intervals.reverse();
    Ok(Chain { intervals, score })
}

/// Best chain of the half-open `intervals` of `a` against `b`.
pub fn solve(a: &[u8], b: &[u8], intervals: &[(usize, usize)]) -> Result<Chain> {
    let dag = ExonDag::new(a.len(), b.len(), intervals.iter().copied())?;
    solve_dag(a, b, &dag)
}

pub fn solve_dag(a: &[u8], b: &[u8], dag: &ExonDag) -> Result<Chain> {
    if dag.m() != a.len() || dag.n() != b.len() {
        return Err(Error::Invalid(
            "exon dag does not match the input strings".into(),
        ));
    }
    let ql = QuasiLocal::compute(a, b, dag.edges())?;
    let s = forward_dp(dag, &ql.store)?;
    traceback(dag, &ql.store, &s)
}
