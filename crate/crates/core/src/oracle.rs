//! Slow reference implementations.
//!
//! Everything here is written straight from the definitions (explicit
//! distribution matrices, quadratic LCS tables, exhaustive chain search)
//! and shares no code with the fast paths it is used to check.

use crate::error::{Error, Result};
use crate::multiply::FactorChain;
use crate::seaweed::Permutation;

/// Largest string length accepted by [`all_substring_scores`].
pub const ALL_SUBSTRING_LIMIT: usize = 512;

/// Distribution matrix of a permutation: `d[i][j]` counts nonzeros with
/// row `>= i` and column `< j`, for `i, j` in `0..=n`.
pub fn distribution(p: &Permutation) -> Vec<Vec<i32>> {
    let n = p.len();
    let mut d = vec![vec![0i32; n + 1]; n + 1];
    for i in (0..n).rev() {
        let c = p.col(i);
        let (upper, lower) = d.split_at_mut(i + 1);
        let row = &mut upper[i];
        row.copy_from_slice(&lower[0]);
        for v in &mut row[c + 1..] {
            *v += 1;
        }
    }
    d
}

/// Recovers the density of an `(n+1) x (n+1)` distribution matrix,
/// panicking if it is not the distribution of a permutation.
pub fn density(d: &[Vec<i32>]) -> Permutation {
    let n = d.len() - 1;
    let mut cols = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = d[r][c + 1] - d[r][c] - d[r + 1][c + 1] + d[r + 1][c];
            match v {
                0 => {}
                1 if cols[r] == usize::MAX => cols[r] = c,
                _ => panic!("density entry ({r}, {c}) = {v} is not a permutation entry"),
            }
        }
    }
    Permutation::from_cols(cols).expect("product density is a permutation")
}

/// Min-plus product of two permutation-distribution matrices, evaluated
/// entry by entry from the definition.
pub fn minplus(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    let n = p.len();
    let dp = distribution(p);
    let dq = distribution(q);
    let mut dc = vec![vec![0i32; n + 1]; n + 1];
    for (i, out) in dc.iter_mut().enumerate() {
        out.fill(i32::MAX);
        for (j, qrow) in dq.iter().enumerate() {
            let a = dp[i][j];
            for (o, &b) in out.iter_mut().zip(qrow) {
                *o = (*o).min(a + b);
            }
        }
    }
    Ok(density(&dc))
}

/// Min-plus product of a factor chain, each factor cut down to the
/// `depth + width` rows it receives. Factor `t` (from 0) receives rows
/// `[(t - 1) depth, (t - 1) depth + N)` and sends them `depth` further on.
/// The result maps row `r` to the original matrix's column `fwd[r]` when
/// the chain is correct.
pub fn fold_factors(chain: &FactorChain) -> Result<Permutation> {
    let m = chain.original_depth as i64;
    let size = chain.original_depth + chain.original_width;
    let mut acc = Permutation::identity(size);
    for (t, f) in chain.factors.iter().enumerate() {
        let start = (t as i64 - 1) * m;
        let end = start + size as i64;
        let w_end = f.window_start + f.window_len() as i64;
        if f.window_start < start || w_end > end {
            return Err(Error::WindowOutOfRange {
                start: f.window_start,
                end: w_end,
                line_start: start,
                line_end: end,
            });
        }
        let cols = (start..end)
            .map(|row| (f.col(row) - start - f.shift) as usize)
            .collect();
        acc = minplus(&acc, &Permutation::from_cols(cols)?)?;
    }
    Ok(acc)
}

/// Classic quadratic LCS length.
pub fn lcs(a: &[u8], b: &[u8]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for &x in a {
        for (j, &y) in b.iter().enumerate() {
            cur[j + 1] = if x == y {
                prev[j] + 1
            } else {
                prev[j + 1].max(cur[j])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// `table[i][j] = LCS(a, b[i+1..=j])` for `0 <= i <= j <= |b|`; entries with
/// `j < i` are zero. One DP per start position.
pub fn all_substring_scores(a: &[u8], b: &[u8]) -> Result<Vec<Vec<usize>>> {
    for len in [a.len(), b.len()] {
        if len > ALL_SUBSTRING_LIMIT {
            return Err(Error::OracleTooLarge {
                len,
                limit: ALL_SUBSTRING_LIMIT,
            });
        }
    }
    let n = b.len();
    let mut table = vec![vec![0usize; n + 1]; n + 1];
    for (i, row) in table.iter_mut().enumerate() {
        // col[x] = LCS(a[..x], b[i..j]) for the current j.
        let mut col = vec![0usize; a.len() + 1];
        for j in i + 1..=n {
            let y = b[j - 1];
            let mut diag = 0;
            for (x, &ch) in a.iter().enumerate() {
                let up = col[x + 1];
                col[x + 1] = if ch == y { diag + 1 } else { up.max(col[x]) };
                diag = up;
            }
            row[j] = col[a.len()];
        }
    }
    Ok(table)
}

/// Max-plus product of the highest-score matrix of `sub` against `b` with
/// the vector `x`: a DP table whose row 0 is seeded with `x`.
pub fn mv(sub: &[u8], b: &[u8], x: &[usize]) -> Result<Vec<usize>> {
    if x.len() != b.len() + 1 {
        return Err(Error::VectorLength {
            got: x.len(),
            expected: b.len() + 1,
        });
    }
    let mut prev: Vec<usize> = x.to_vec();
    for k in 1..prev.len() {
        prev[k] = prev[k].max(prev[k - 1]);
    }
    let mut cur = vec![0; prev.len()];
    for &ch in sub {
        cur[0] = prev[0];
        for (j, &y) in b.iter().enumerate() {
            let diag = prev[j] + usize::from(ch == y);
            cur[j + 1] = diag.max(prev[j + 1]).max(cur[j]);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev)
}

/// Best chain score by dynamic programming over the exon dag, with every
/// edge product taken by [`mv`]. Intervals are `(lo, hi)` half-open.
pub fn chain_dp(a: &[u8], b: &[u8], intervals: &[(usize, usize)]) -> usize {
    let m = a.len();
    let mut s = vec![vec![0usize; b.len() + 1]];
    for j in 1..=m {
        let mut row = s[j - 1].clone();
        for &(lo, hi) in intervals.iter().filter(|iv| iv.1 == j) {
            let y = mv(&a[lo..hi], b, &s[lo]).expect("vector length matches");
            for (r, v) in row.iter_mut().zip(y) {
                *r = (*r).max(v);
            }
        }
        s.push(row);
    }
    s[m][b.len()]
}

/// Best chain score by enumerating every chain of the given intervals.
/// Exponential; meant for a dozen intervals or fewer.
pub fn chain_enumeration(a: &[u8], b: &[u8], intervals: &[(usize, usize)]) -> usize {
    let mut sorted = intervals.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut best = 0;
    let mut concat = Vec::new();
    extend_chains(a, b, &sorted, 0, 0, &mut concat, &mut best);
    best
}

fn extend_chains(
    a: &[u8],
    b: &[u8],
    sorted: &[(usize, usize)],
    from: usize,
    min_lo: usize,
    concat: &mut Vec<u8>,
    best: &mut usize,
) {
    *best = (*best).max(lcs(concat, b));
    for (t, &(lo, hi)) in sorted.iter().enumerate().skip(from) {
        if lo < min_lo {
            continue;
        }
        let mark = concat.len();
        concat.extend_from_slice(&a[lo..hi]);
        extend_chains(a, b, sorted, t + 1, hi, concat, best);
        concat.truncate(mark);
    }
}
