//! Max-plus products of highest-score matrices with score vectors.

use crate::error::{Error, Result};
use crate::seaweed::{DominanceCounter, SeaweedMatrix};

/// Scores against every prefix of `b`: non-decreasing with unit steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScoreVector {
    values: Vec<usize>,
}

impl ScoreVector {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid(
                "score vector must have length at least 1".into(),
            ));
        }
        if let Some(j) = values
            .windows(2)
            .position(|w| w[1] < w[0] || w[1] - w[0] > 1)
        {
            return Err(Error::NotUnitStep(j));
        }
        Ok(ScoreVector { values })
    }

    pub fn zeros(width: usize) -> Self {
        ScoreVector {
            values: vec![0; width + 1],
        }
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(ScoreVector::new(values.clone()).is_ok());
        ScoreVector { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.values
    }

    pub fn last(&self) -> usize {
        *self.values.last().unwrap()
    }

    /// Elementwise maximum, in place.
    pub fn max_assign(&mut self, other: &ScoreVector) {
        for (v, &o) in self.values.iter_mut().zip(&other.values) {
            *v = (*v).max(o);
        }
    }
}

impl std::ops::Index<usize> for ScoreVector {
    type Output = usize;

    fn index(&self, k: usize) -> &usize {
        &self.values[k]
    }
}

/// `y[k] = max_{j <= k} x[j] + score(j, k)`.
pub fn mv_maxplus(s: &SeaweedMatrix, x: &ScoreVector) -> Result<ScoreVector> {
    mv_maxplus_indexed(s, &s.counter(), x)
}

/// [`mv_maxplus`] with a prebuilt dominance index of `s`.
///
/// Written as `y[k] = k - min_j (j - x[j] + d(j, k))`. The matrix under the
/// min is Monge, so the leftmost minimizing `j` is non-decreasing in `k`
/// and the rows are solved by divide and conquer over `k`. Within one
/// node, `d(j, k)` is taken from the index once at the top of the `j`
/// range and then updated one row at a time going down.
pub fn mv_maxplus_indexed(
    s: &SeaweedMatrix,
    counter: &DominanceCounter,
    x: &ScoreVector,
) -> Result<ScoreVector> {
    let n = s.width();
    if x.len() != n + 1 {
        return Err(Error::VectorLength {
            got: x.len(),
            expected: n + 1,
        });
    }
    let xp: Vec<i64> = x
        .as_slice()
        .iter()
        .enumerate()
        .map(|(j, &v)| j as i64 - v as i64)
        .collect();
    let mut best = vec![0usize; n + 1];
    let mut solver = RowMinima {
        fwd: s.fwd(),
        depth: s.depth(),
        counter,
        xp: &xp,
        best: &mut best,
    };
    solver.solve(0, n, 0, n);
    let y = best
        .iter()
        .enumerate()
        .map(|(k, &j)| (k as i64 - (xp[j] + counter.count(j as i64, k as i64) as i64)) as usize)
        .collect();
    Ok(ScoreVector::from_vec_unchecked(y))
}

struct RowMinima<'a> {
    fwd: &'a [usize],
    depth: usize,
    counter: &'a DominanceCounter,
    xp: &'a [i64],
    best: &'a mut [usize],
}

impl RowMinima<'_> {
    /// Fills `best[k]` for `k` in `[k_lo, k_hi]`, knowing the argmin lies in
    /// `[j_lo, j_hi]`.
    fn solve(&mut self, k_lo: usize, k_hi: usize, j_lo: usize, j_hi: usize) {
        if k_lo > k_hi {
            return;
        }
        let k = k_lo + (k_hi - k_lo) / 2;
        let mut d = self.counter.count(j_hi as i64, k as i64) as i64;
        let mut arg = j_hi;
        let mut min = self.xp[j_hi] + d;
        for j in (j_lo..j_hi).rev() {
            if self.fwd.get(j + self.depth).is_some_and(|&c| c < k) {
                d += 1;
            }
            let v = self.xp[j] + d;
            if v <= min {
                min = v;
                arg = j;
            }
        }
        self.best[k] = arg;
        if k > k_lo {
            self.solve(k_lo, k - 1, j_lo, arg);
        }
        self.solve(k + 1, k_hi, arg, j_hi);
    }
}

/// `score(j, k)` for every `j` in `0..=k`, in O(k) from the matrix alone.
pub fn column_scores(s: &SeaweedMatrix, k: usize) -> Vec<usize> {
    let p = s.depth();
    let mut out = vec![0; k + 1];
    let mut d = 0;
    for j in (0..k).rev() {
        if s.fwd()[j + p] < k {
            d += 1;
        }
        out[j] = k - j - d;
    }
    out
}
