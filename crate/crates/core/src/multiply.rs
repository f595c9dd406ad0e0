//! Multiplication of seaweed matrices.
//!
//! * [`multiply_core`]: min-plus product of two finite permutation-distribution
//!   matrices, given and returned as permutations, in O(n log n).
//! * [`compose`]: the matrix of a vertically concatenated grid from the
//!   matrices of its two parts.
//! * [`decompose`] / [`multiply_windowed`] / [`compose_balanced`]: the same
//!   composition when one part is much shallower than the grid is wide. The
//!   shallow operand is split into a chain of factors whose cores have
//!   O(depth) nonzeros, and the deep operand is pushed through the chain one
//!   window at a time.

use crate::error::{Error, Result};
use crate::seaweed::{Permutation, SeaweedMatrix};

/// Min-plus product of the distribution matrices of `p` and `q`, returned as
/// the density permutation.
pub fn multiply_core(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    Ok(Permutation::from_cols_unchecked(steady_ant(
        p.cols(),
        q.cols(),
    )))
}

/// Divide and conquer on the middle index.
///
/// The nonzeros of `p` with columns in the lower half and the nonzeros of
/// `q` with rows in the lower half form an independent half-size product
/// (likewise for the upper halves). The two sub-products together form a
/// permutation that agrees with the answer except near a monotone staircase,
/// which is traced in one pass from the bottom-left corner.
///
/// Along the trace, `delta(i, k)` is the number of lower nonzeros with
/// `row >= i, col >= k` minus the number of upper nonzeros with
/// `row < i, col < k`. It is non-increasing in both coordinates with unit
/// steps; `bound[i]` is the first `k` with `delta(i, k) <= 0`. A lower
/// nonzero survives left of the staircase, an upper one right of it, and
/// every other row gets its nonzero at the staircase corner `bound[r] - 1`.
fn steady_ant(p: &[usize], q: &[usize]) -> Vec<usize> {
    let n = p.len();
    if n <= SMALL {
        let mut out = vec![0; n];
        small_product(p, q, &mut out);
        return out;
    }
    let h = n / 2;

    let mut lo_rows = Vec::with_capacity(h);
    let mut hi_rows = Vec::with_capacity(n - h);
    let mut p_lo = Vec::with_capacity(h);
    let mut p_hi = Vec::with_capacity(n - h);
    for (r, &c) in p.iter().enumerate() {
        if c < h {
            lo_rows.push(r);
            p_lo.push(c);
        } else {
            hi_rows.push(r);
            p_hi.push(c - h);
        }
    }

    let mut is_lo_col = vec![false; n];
    for &c in &q[..h] {
        is_lo_col[c] = true;
    }
    let mut rank = vec![0; n];
    let mut lo_cols = Vec::with_capacity(h);
    let mut hi_cols = Vec::with_capacity(n - h);
    for c in 0..n {
        if is_lo_col[c] {
            rank[c] = lo_cols.len();
            lo_cols.push(c);
        } else {
            rank[c] = hi_cols.len();
            hi_cols.push(c);
        }
    }
    let q_lo: Vec<usize> = q[..h].iter().map(|&c| rank[c]).collect();
    let q_hi: Vec<usize> = q[h..].iter().map(|&c| rank[c]).collect();
    drop(rank);

    let r_lo = steady_ant(&p_lo, &q_lo);
    let r_hi = steady_ant(&p_hi, &q_hi);

    let mut col_of = vec![0; n];
    let mut is_lo_row = vec![false; n];
    for (t, &r) in lo_rows.iter().enumerate() {
        col_of[r] = lo_cols[r_lo[t]];
        is_lo_row[r] = true;
    }
    for (t, &r) in hi_rows.iter().enumerate() {
        col_of[r] = hi_cols[r_hi[t]];
    }
    let mut row_of = vec![0; n];
    for (r, &c) in col_of.iter().enumerate() {
        row_of[c] = r;
    }

    let mut bound = vec![0; n + 1];
    let mut k = 0;
    let mut delta = 0i64;
    for i in (0..n).rev() {
        let c = col_of[i];
        if (is_lo_row[i] && c >= k) || (!is_lo_row[i] && c < k) {
            delta += 1;
        }
        while delta > 0 && k < n {
            let r = row_of[k];
            if (is_lo_col[k] && r >= i) || (!is_lo_col[k] && r < i) {
                delta -= 1;
            }
            k += 1;
        }
        bound[i] = k;
    }

    (0..n)
        .map(|r| {
            let x = col_of[r];
            if (is_lo_row[r] && x < bound[r]) || (!is_lo_row[r] && x >= bound[r]) {
                x
            } else {
                debug_assert!(bound[r] > bound[r + 1]);
                bound[r] - 1
            }
        })
        .collect()
}

const SMALL: usize = 16;

/// Product for `n <= SMALL` by combing, without allocation.
///
/// Bubble-sorting `q` back to the identity lists adjacent column swaps;
/// replayed in reverse they build `q` from the identity, each one creating a
/// crossing. Replaying them on `p` instead, a swap whose two seaweeds have
/// already crossed is skipped.
fn small_product(p: &[usize], q: &[usize], out: &mut [usize]) {
    let n = p.len();
    debug_assert!(n <= SMALL && q.len() == n);
    let mut q_inv = [0usize; SMALL];
    for (r, &c) in q.iter().enumerate() {
        q_inv[c] = r;
    }
    let mut word = [0u8; SMALL * (SMALL - 1) / 2];
    let mut len = 0;
    for pass in 1..n {
        for i in 0..n - pass {
            if q_inv[i] > q_inv[i + 1] {
                q_inv.swap(i, i + 1);
                word[len] = i as u8;
                len += 1;
            }
        }
    }
    let mut x_inv = [0usize; SMALL];
    for (r, &c) in p.iter().enumerate() {
        x_inv[c] = r;
    }
    for &i in word[..len].iter().rev() {
        let i = i as usize;
        if x_inv[i] < x_inv[i + 1] {
            x_inv.swap(i, i + 1);
        }
    }
    for (c, &r) in x_inv[..n].iter().enumerate() {
        out[r] = c;
    }
}

fn check_widths(a: &SeaweedMatrix, b: &SeaweedMatrix) -> Result<()> {
    if a.width() != b.width() {
        return Err(Error::SizeMismatch {
            left: a.width(),
            right: b.width(),
        });
    }
    Ok(())
}

/// Matrix of the grid `a` stacked on top of `b` (string `a1 a2` against `b`).
///
/// `b`'s left-side seaweeds pass through unchanged, `a`'s right-side
/// seaweeds only move over by `b.depth()`, and the `width` seaweeds crossing
/// the shared boundary are resolved by one [`multiply_core`] call after
/// order-preserving relabelling.
pub fn compose(a: &SeaweedMatrix, b: &SeaweedMatrix) -> Result<SeaweedMatrix> {
    check_widths(a, b)?;
    let n = a.width();
    let (pa, pb) = (a.depth(), b.depth());
    let mut fwd = vec![0; pa + pb + n];
    fwd[..pb].copy_from_slice(&b.fwd()[..pb]);

    let mut mid_rows = Vec::with_capacity(n);
    let mut p = Vec::with_capacity(n);
    for (r, &c) in a.fwd().iter().enumerate() {
        if c >= n {
            fwd[r + pb] = c + pb;
        } else {
            mid_rows.push(r + pb);
            p.push(c);
        }
    }

    let tops = &b.fwd()[pb..];
    let mut used = vec![false; pb + n];
    for &c in tops {
        used[c] = true;
    }
    let mut rank = vec![0; pb + n];
    let mut cols = Vec::with_capacity(n);
    for (c, _) in used.iter().enumerate().filter(|(_, &u)| u) {
        rank[c] = cols.len();
        cols.push(c);
    }
    let q: Vec<usize> = tops.iter().map(|&c| rank[c]).collect();

    let prod = steady_ant(&p, &q);
    for (t, &row) in mid_rows.iter().enumerate() {
        fwd[row] = cols[prod[t]];
    }
    Ok(SeaweedMatrix::from_parts_unchecked(pa + pb, n, fwd))
}

/// One factor of a decomposed matrix, as an infinite permutation on the
/// integers: rows `window_start + x` for `x < core.len()` go to columns
/// `window_start + shift + core[x]`; every other row `j` goes to `j + shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub window_start: i64,
    pub core: Permutation,
    pub shift: i64,
}

impl Factor {
    pub fn window_len(&self) -> usize {
        self.core.len()
    }

    pub fn col(&self, row: i64) -> i64 {
        let x = row - self.window_start;
        if (0..self.core.len() as i64).contains(&x) {
            self.window_start + self.shift + self.core.col(x as usize) as i64
        } else {
            row + self.shift
        }
    }
}

/// A matrix written as a min-plus product of small-core factors.
///
/// Rows and columns use integer coordinates: a core nonzero `(r, c)` of the
/// original matrix is the pair `(r - depth, c)`, and outside the core row `j`
/// maps to `j + depth`. The product of the factors, in order, maps every row
/// `j` to the original matrix's column for `j` plus `total_shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorChain {
    pub factors: Vec<Factor>,
    pub total_shift: i64,
    pub original_depth: usize,
    pub original_width: usize,
}

impl FactorChain {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Splits a seaweed matrix of depth `m` into factors with cores of at most
/// `2m` nonzeros.
///
/// Each step halves the width. Seaweeds that stay in the left half go to the
/// left factor, seaweeds that start in the right half go to the right
/// factor, and the exactly `m` seaweeds crossing from left to right are
/// parked in a buffer of `m` positions: uncrossed and in start order in the
/// left factor, then sent to their true ends by the right factor. Both
/// halves are split again until their width is at most `m`.
pub fn decompose(b: &SeaweedMatrix) -> FactorChain {
    let m = b.depth();
    let n = b.width();
    if m == 0 {
        return FactorChain {
            factors: Vec::new(),
            total_shift: 0,
            original_depth: 0,
            original_width: n,
        };
    }
    let mi = m as i64;
    // Work with the matrix composed with a shift of -m so every node maps its
    // window onto itself.
    let root: Vec<i64> = b.fwd().iter().map(|&c| c as i64 - mi).collect();
    let mut leaves = Vec::new();
    split_node(m, 0, n, root, &mut leaves);

    let count = leaves.len() as i64;
    let factors = leaves
        .into_iter()
        .enumerate()
        .map(|(t, (start, cols))| {
            let core = cols.iter().map(|&c| (c - start) as usize).collect();
            Factor {
                window_start: start + t as i64 * mi,
                core: Permutation::from_cols_unchecked(core),
                shift: mi,
            }
        })
        .collect();
    FactorChain {
        factors,
        total_shift: (count - 1) * mi,
        original_depth: m,
        original_width: n,
    }
}

/// `cols[x]` is the column of row `offset - m + x`; all columns lie in the
/// window `offset - m .. offset + width`.
fn split_node(
    m: usize,
    offset: i64,
    width: usize,
    cols: Vec<i64>,
    leaves: &mut Vec<(i64, Vec<i64>)>,
) {
    let start = offset - m as i64;
    if width <= m {
        leaves.push((start, cols));
        return;
    }
    let h = width / 2;
    let cut = offset + h as i64 - m as i64;
    let mut left = Vec::with_capacity(m + h);
    let mut right = Vec::with_capacity(m + width - h);
    for &c in &cols[..m + h] {
        if c < cut {
            left.push(c);
        } else {
            left.push(cut + right.len() as i64);
            right.push(c);
        }
    }
    debug_assert_eq!(right.len(), m, "exactly depth-many seaweeds cross the cut");
    debug_assert!(cols[m + h..].iter().all(|&c| c >= cut));
    right.extend_from_slice(&cols[m + h..]);
    drop(cols);
    split_node(m, offset, h, left, leaves);
    split_node(m, offset + h as i64, width - h, right, leaves);
}

/// A permutation of the integers that is a shift outside a finite range of
/// rows: the running product while a matrix is multiplied by a factor chain.
///
/// Columns are stored relative to a lazily applied `offset`, so multiplying
/// by a factor only touches the rows whose columns fall in its window.
#[derive(Debug, Clone)]
pub struct ColumnLine {
    stored: Vec<i64>,
    rows_by_col: Vec<usize>,
    base: i64,
    offset: i64,
}

impl ColumnLine {
    /// `cols[r]` is the column of row `r`; the columns must be a permutation
    /// of `base..base + cols.len()`.
    pub fn new(base: i64, cols: Vec<i64>) -> Result<Self> {
        let mut rows_by_col = vec![usize::MAX; cols.len()];
        for (r, &c) in cols.iter().enumerate() {
            let slot = c - base;
            if slot < 0 || slot >= cols.len() as i64 || rows_by_col[slot as usize] != usize::MAX {
                return Err(Error::Invalid(format!(
                    "column {c} of row {r} breaks the column line starting at {base}"
                )));
            }
            rows_by_col[slot as usize] = r;
        }
        Ok(ColumnLine {
            stored: cols,
            rows_by_col,
            base,
            offset: 0,
        })
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        let stored = p.cols().iter().map(|&c| c as i64).collect();
        ColumnLine {
            stored,
            rows_by_col: p.inverse().into_cols(),
            base: 0,
            offset: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.stored.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stored.is_empty()
    }

    /// Range of columns currently occupied.
    pub fn span(&self) -> std::ops::Range<i64> {
        let start = self.base + self.offset;
        start..start + self.stored.len() as i64
    }

    pub fn col(&self, row: usize) -> i64 {
        self.stored[row] + self.offset
    }

    pub fn cols(&self) -> Vec<i64> {
        self.stored.iter().map(|&c| c + self.offset).collect()
    }

    fn place(&mut self, rows: &[usize], cols: &[usize], slot: usize, stored_start: i64) {
        for (&r, &c) in rows.iter().zip(cols) {
            self.stored[r] = stored_start + c as i64;
            self.rows_by_col[slot + c] = r;
        }
    }
}

/// Multiplies the running product by one factor.
///
/// The rows whose columns fall in the factor's window are relabelled by rank
/// and multiplied with the factor core by [`multiply_core`]; every other row
/// keeps its column up to the factor's shift.
pub fn multiply_windowed(line: &mut ColumnLine, factor: &Factor) -> Result<()> {
    let w = factor.window_len();
    let slot = factor.window_start - line.offset - line.base;
    if slot < 0 || slot + w as i64 > line.len() as i64 {
        let span = line.span();
        return Err(Error::WindowOutOfRange {
            start: factor.window_start,
            end: factor.window_start + w as i64,
            line_start: span.start,
            line_end: span.end,
        });
    }
    let slot = slot as usize;
    let stored_start = factor.window_start - line.offset;
    if factor.core.cols().iter().enumerate().all(|(x, &c)| x == c) {
        line.offset += factor.shift;
        return Ok(());
    }

    if w <= SMALL {
        let mut rows = [0usize; SMALL];
        let rows = &mut rows[..w];
        rows.copy_from_slice(&line.rows_by_col[slot..slot + w]);
        rows.sort_unstable();
        let mut p = [0usize; SMALL];
        for (x, &r) in p.iter_mut().zip(rows.iter()) {
            *x = (line.stored[r] - stored_start) as usize;
        }
        let mut prod = [0usize; SMALL];
        small_product(&p[..w], factor.core.cols(), &mut prod[..w]);
        line.place(rows, &prod[..w], slot, stored_start);
    } else {
        let mut rows: Vec<usize> = line.rows_by_col[slot..slot + w].to_vec();
        rows.sort_unstable();
        let p: Vec<usize> = rows
            .iter()
            .map(|&r| (line.stored[r] - stored_start) as usize)
            .collect();
        let prod = steady_ant(&p, factor.core.cols());
        line.place(&rows, &prod, slot, stored_start);
    }
    line.offset += factor.shift;
    Ok(())
}

/// Same result as [`compose`], in time linear in the depths plus
/// O(width log(shallow depth)).
///
/// When `b` is the shallow operand, `a` is pushed through `decompose(b)`.
/// When `a` is, both strings are reversed, which swaps the operands.
pub fn compose_balanced(a: &SeaweedMatrix, b: &SeaweedMatrix) -> Result<SeaweedMatrix> {
    check_widths(a, b)?;
    if b.depth() == 0 {
        return Ok(a.clone());
    }
    if a.depth() == 0 {
        return Ok(b.clone());
    }
    if b.depth() > a.depth() {
        return Ok(fold_through_chain(&b.reversed(), &a.reversed())?.reversed());
    }
    fold_through_chain(a, b)
}

fn fold_through_chain(a: &SeaweedMatrix, b: &SeaweedMatrix) -> Result<SeaweedMatrix> {
    let n = a.width();
    let m = b.depth();
    let mi = m as i64;
    let chain = decompose(b);

    // Rows below `m` are `a`'s trivial rows that enter `b`'s left side.
    let start: Vec<i64> = (0..m)
        .map(|r| r as i64 - mi)
        .chain(a.fwd().iter().map(|&c| c as i64))
        .collect();
    let mut line = ColumnLine::new(-mi, start)?;
    for f in &chain.factors {
        multiply_windowed(&mut line, f)?;
    }
    let back = line.offset - chain.total_shift;
    let fwd = line.stored.iter().map(|&c| (c + back) as usize).collect();
    Ok(SeaweedMatrix::from_parts_unchecked(a.depth() + m, n, fwd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
        let mut cols: Vec<usize> = (0..n).collect();
        cols.shuffle(rng);
        Permutation::from_cols(cols).unwrap()
    }

    fn all_perms(n: usize) -> Vec<Permutation> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if cur.len() == used.len() {
                out.push(Permutation::from_cols(cur.clone()).unwrap());
                return;
            }
            for c in 0..used.len() {
                if !used[c] {
                    used[c] = true;
                    cur.push(c);
                    rec(cur, used, out);
                    cur.pop();
                    used[c] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn identity_is_neutral() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [0, 1, 5, 33] {
            let q = random_perm(&mut rng, n);
            let id = Permutation::identity(n);
            assert_eq!(multiply_core(&id, &q).unwrap(), q);
            assert_eq!(multiply_core(&q, &id).unwrap(), q);
        }
    }

    #[test]
    fn transposition_is_idempotent() {
        let t = Permutation::from_cols(vec![1, 0]).unwrap();
        assert_eq!(multiply_core(&t, &t).unwrap(), t);
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let e = multiply_core(&Permutation::identity(2), &Permutation::identity(3));
        assert_eq!(e, Err(Error::SizeMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn exhaustive_small_products_match_oracle() {
        for n in 0..=4 {
            let perms = all_perms(n);
            for p in &perms {
                for q in &perms {
                    assert_eq!(
                        multiply_core(p, q).unwrap(),
                        oracle::minplus(p, q).unwrap(),
                        "p={:?} q={:?}",
                        p.cols(),
                        q.cols()
                    );
                }
            }
        }
    }

    #[test]
    fn random_products_match_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..200 {
            let n = rng.gen_range(1..=64);
            let p = random_perm(&mut rng, n);
            let q = random_perm(&mut rng, n);
            assert_eq!(
                multiply_core(&p, &q).unwrap(),
                oracle::minplus(&p, &q).unwrap()
            );
        }
    }

    #[test]
    fn factor_col_acts_on_integers() {
        let f = Factor {
            window_start: 2,
            core: Permutation::from_cols(vec![1, 0]).unwrap(),
            shift: 3,
        };
        assert_eq!(f.col(0), 3);
        assert_eq!(f.col(2), 6);
        assert_eq!(f.col(3), 5);
        assert_eq!(f.col(4), 7);
    }

    #[test]
    fn identity_core_only_shifts() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = random_perm(&mut rng, 6);
        let mut line = ColumnLine::from_permutation(&p);
        let f = Factor {
            window_start: 1,
            core: Permutation::identity(3),
            shift: 4,
        };
        multiply_windowed(&mut line, &f).unwrap();
        let want: Vec<i64> = p.cols().iter().map(|&c| c as i64 + 4).collect();
        assert_eq!(line.cols(), want);
    }

    #[test]
    fn transposition_window_matches_full_embedding() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let c = random_perm(&mut rng, 6);
            let start = rng.gen_range(0..5);
            let f = Factor {
                window_start: start,
                core: Permutation::from_cols(vec![1, 0]).unwrap(),
                shift: 0,
            };
            let full: Vec<usize> = (0..6).map(|j| f.col(j) as usize).collect();
            let full = Permutation::from_cols(full).unwrap();
            let mut line = ColumnLine::from_permutation(&c);
            multiply_windowed(&mut line, &f).unwrap();
            let got: Vec<usize> = line.cols().iter().map(|&x| x as usize).collect();
            assert_eq!(got, oracle::minplus(&c, &full).unwrap().into_cols());
        }
    }

    #[test]
    fn window_outside_line_is_rejected() {
        let mut line = ColumnLine::from_permutation(&Permutation::identity(4));
        let f = Factor {
            window_start: 3,
            core: Permutation::identity(2),
            shift: 0,
        };
        assert!(matches!(
            multiply_windowed(&mut line, &f),
            Err(Error::WindowOutOfRange { .. })
        ));
    }

    #[test]
    fn compose_with_empty_is_identity() {
        let s = SeaweedMatrix::single_row(b'a', b"abca");
        let e = SeaweedMatrix::empty(4);
        assert_eq!(compose(&e, &s).unwrap(), s);
        assert_eq!(compose(&s, &e).unwrap(), s);
        assert_eq!(compose_balanced(&e, &s).unwrap(), s);
        assert_eq!(compose_balanced(&s, &e).unwrap(), s);
        assert!(compose(&s, &SeaweedMatrix::empty(3)).is_err());
        assert!(compose_balanced(&s, &SeaweedMatrix::empty(3)).is_err());
    }

    #[test]
    fn decompose_leaf_counts() {
        let b = crate::lcs::build(b"ab", b"abcdabcd");
        assert_eq!(decompose(&b).len(), 4);
        let shallow = crate::lcs::build(b"abcd", b"ab");
        let chain = decompose(&shallow);
        assert_eq!(chain.len(), 1);
        assert_eq!(chain.total_shift, 0);
        assert_eq!(chain.factors[0].core.cols(), shallow.fwd());
        assert_eq!(chain.factors[0].window_start, -4);
        assert!(decompose(&SeaweedMatrix::empty(5)).is_empty());
    }

    #[test]
    fn decompose_folds_back_to_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let a: Vec<u8> = (0..rng.gen_range(1..6))
                .map(|_| rng.gen_range(b'a'..b'd'))
                .collect();
            let b: Vec<u8> = (0..rng.gen_range(0..40))
                .map(|_| rng.gen_range(b'a'..b'd'))
                .collect();
            let s = crate::lcs::build(&a, &b);
            let chain = decompose(&s);
            assert!(chain.factors.iter().all(|f| f.window_len() <= 2 * a.len()));
            assert_eq!(oracle::fold_factors(&chain).unwrap(), s.permutation());
        }
    }

    #[test]
    fn balanced_matches_plain_compose_both_ways() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..200 {
            let n = rng.gen_range(0..30);
            let b: Vec<u8> = (0..n).map(|_| rng.gen_range(b'a'..b'c')).collect();
            let x: Vec<u8> = (0..rng.gen_range(0..12))
                .map(|_| rng.gen_range(b'a'..b'c'))
                .collect();
            let y: Vec<u8> = (0..rng.gen_range(0..12))
                .map(|_| rng.gen_range(b'a'..b'c'))
                .collect();
            let (sx, sy) = (crate::lcs::build(&x, &b), crate::lcs::build(&y, &b));
            assert_eq!(
                compose_balanced(&sx, &sy).unwrap(),
                compose(&sx, &sy).unwrap()
            );
        }
    }
}
