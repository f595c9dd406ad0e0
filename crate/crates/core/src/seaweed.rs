//! Seaweed matrices: the implicit representation of the extended
//! highest-score matrix of a string pair.
//!
//! For strings `a` (length `depth`) and `b` (length `width`) the matrix is an
//! infinite permutation over odd half-integer indices whose non-trivial core
//! has `depth + width` nonzeros. Half-integers are never stored. A core
//! nonzero is kept as a pair of 0-based local ranks `(r, c)`:
//!
//! * local row `r` stands for row index `r - depth + 1/2`, so rows
//!   `0..depth` are the left side of the alignment grid (bottom row of `a`
//!   first) and rows `depth..depth + width` are the tops of `b`'s columns;
//! * local column `c` stands for column index `c + 1/2`, so columns
//!   `0..width` are the bottoms of `b`'s columns and `width..width + depth`
//!   the right side (bottom row of `a` first).
//!
//! Outside the core the matrix is the shifted identity `i -> i + depth`.
//! The LCS of `a` against `b[i+1..=j]` is `j - i` minus the number of core
//! nonzeros strictly below-left of `(i, j)`.

use crate::error::{Error, Result};
use crate::rangecount::MergeTree;

/// A finite permutation matrix over `0..n` stored as its row-to-column map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    cols: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            cols: (0..n).collect(),
        }
    }

    /// Builds a permutation from `cols[row] = col`, checking bijectivity.
    pub fn from_cols(cols: Vec<usize>) -> Result<Self> {
        check_permutation(&cols)?;
        Ok(Permutation { cols })
    }

    pub(crate) fn from_cols_unchecked(cols: Vec<usize>) -> Self {
        debug_assert!(check_permutation(&cols).is_ok());
        Permutation { cols }
    }

    /// Builds a permutation from its nonzero index pairs.
    pub fn from_nonzeros(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
        let n = pairs.len();
        let mut cols = vec![usize::MAX; n];
        for &(r, c) in &pairs {
            if r >= n || cols[r] != usize::MAX {
                return Err(Error::Invalid(format!("row {r} repeated or out of range")));
            }
            cols[r] = c;
        }
        Self::from_cols(cols)
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn col(&self, row: usize) -> usize {
        self.cols[row]
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn into_cols(self) -> Vec<usize> {
        self.cols
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            cols: invert(&self.cols),
        }
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cols.iter().copied().enumerate()
    }
}

pub(crate) fn invert(cols: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; cols.len()];
    for (r, &c) in cols.iter().enumerate() {
        inv[c] = r;
    }
    inv
}

fn check_permutation(cols: &[usize]) -> Result<()> {
    let mut seen = vec![false; cols.len()];
    for (r, &c) in cols.iter().enumerate() {
        if c >= cols.len() || seen[c] {
            return Err(Error::Invalid(format!(
                "not a permutation: row {r} maps to column {c}"
            )));
        }
        seen[c] = true;
    }
    Ok(())
}

/// Implicit extended highest-score matrix of one string pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeaweedMatrix {
    depth: usize,
    width: usize,
    fwd: Vec<usize>,
    inv: Vec<usize>,
}

impl SeaweedMatrix {
    /// The depth-0 matrix: identity on `width` seaweeds.
    pub fn empty(width: usize) -> Self {
        SeaweedMatrix {
            depth: 0,
            width,
            fwd: (0..width).collect(),
            inv: (0..width).collect(),
        }
    }

    /// Matrix of the one-row grid comparing `alpha` against `b`.
    ///
    /// The left seaweed drops at the first match; the seaweed entering at a
    /// match column turns right and drops at the next match; every other
    /// seaweed goes straight down. A seaweed with no match ahead leaves on
    /// the right side.
    pub fn single_row(alpha: u8, b: &[u8]) -> Self {
        let n = b.len();
        let mut fwd = vec![0; n + 1];
        let mut carry = 0;
        for (col, &beta) in b.iter().enumerate() {
            if beta == alpha {
                fwd[carry] = col;
                carry = col + 1;
            } else {
                fwd[col + 1] = col;
            }
        }
        fwd[carry] = n;
        let inv = invert(&fwd);
        SeaweedMatrix {
            depth: 1,
            width: n,
            fwd,
            inv,
        }
    }

    /// Wraps a raw core permutation, `fwd[r] = c` in local ranks.
    pub fn from_parts(depth: usize, width: usize, fwd: Vec<usize>) -> Result<Self> {
        if fwd.len() != depth + width {
            return Err(Error::SizeMismatch {
                left: fwd.len(),
                right: depth + width,
            });
        }
        check_permutation(&fwd)?;
        let inv = invert(&fwd);
        Ok(SeaweedMatrix {
            depth,
            width,
            fwd,
            inv,
        })
    }

    pub(crate) fn from_parts_unchecked(depth: usize, width: usize, fwd: Vec<usize>) -> Self {
        debug_assert_eq!(fwd.len(), depth + width);
        debug_assert!(check_permutation(&fwd).is_ok());
        let inv = invert(&fwd);
        SeaweedMatrix {
            depth,
            width,
            fwd,
            inv,
        }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of core nonzeros, `depth + width`.
    pub fn size(&self) -> usize {
        self.fwd.len()
    }

    pub fn fwd(&self) -> &[usize] {
        &self.fwd
    }

    pub fn inv(&self) -> &[usize] {
        &self.inv
    }

    pub fn permutation(&self) -> Permutation {
        Permutation::from_cols_unchecked(self.fwd.clone())
    }

    /// Core nonzeros strictly below-left of the integer point `(i, j)`,
    /// with `i` on the row line `-depth..=width` and `j` on the column line
    /// `0..=width + depth`. Linear scan; see [`DominanceCounter`] for the
    /// indexed version.
    pub fn dominance(&self, i: i64, j: i64) -> usize {
        let first = (i + self.depth as i64).max(0) as usize;
        self.fwd
            .iter()
            .skip(first)
            .filter(|&&c| (c as i64) < j)
            .count()
    }

    /// LCS of `a` against `b[i+1..=j]`.
    pub fn score_substring(&self, i: usize, j: usize) -> Result<usize> {
        if i > j || j > self.width {
            return Err(Error::IndexOutOfRange {
                i,
                j,
                width: self.width,
            });
        }
        Ok(j - i - self.dominance(i as i64, j as i64))
    }

    /// LCS of `a` against every prefix of `b`.
    pub fn row0_scores(&self) -> Vec<usize> {
        let n = self.width;
        let mut ends = vec![0usize; n + 1];
        for &c in &self.fwd[self.depth..] {
            if c < n {
                ends[c + 1] += 1;
            }
        }
        let mut dropped = 0;
        (0..=n)
            .map(|k| {
                dropped += ends[k];
                k - dropped
            })
            .collect()
    }

    /// Matrix of the reversed strings: the grid rotated by half a turn.
    pub fn reversed(&self) -> SeaweedMatrix {
        let n = self.size();
        let fwd = (0..n).map(|x| n - 1 - self.inv[n - 1 - x]).collect();
        let inv = (0..n).map(|x| n - 1 - self.fwd[n - 1 - x]).collect();
        SeaweedMatrix {
            depth: self.depth,
            width: self.width,
            fwd,
            inv,
        }
    }

    pub fn counter(&self) -> DominanceCounter {
        DominanceCounter::new(self)
    }
}

/// Static dominance-counting index over the core nonzeros of a matrix.
#[derive(Debug, Clone)]
pub struct DominanceCounter {
    depth: usize,
    width: usize,
    tree: MergeTree,
}

impl DominanceCounter {
    pub fn new(matrix: &SeaweedMatrix) -> Self {
        let cols: Vec<u32> = matrix.fwd.iter().map(|&c| c as u32).collect();
        DominanceCounter {
            depth: matrix.depth,
            width: matrix.width,
            tree: MergeTree::new(&cols),
        }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Same contract as [`SeaweedMatrix::dominance`], in O(log² n).
    pub fn count(&self, i: i64, j: i64) -> usize {
        let first = (i + self.depth as i64).max(0) as usize;
        let last_col = j.clamp(0, u32::MAX as i64) as u32;
        self.tree.count(first..self.tree.len(), 0..last_col)
    }

    pub fn score_substring(&self, i: usize, j: usize) -> Result<usize> {
        if i > j || j > self.width {
            return Err(Error::IndexOutOfRange {
                i,
                j,
                width: self.width,
            });
        }
        Ok(j - i - self.count(i as i64, j as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_row_examples() {
        assert_eq!(SeaweedMatrix::single_row(b'c', b"ab").fwd(), &[2, 0, 1]);
        assert_eq!(SeaweedMatrix::single_row(b'b', b"ab").fwd(), &[1, 0, 2]);
        let s = SeaweedMatrix::single_row(b'x', b"");
        assert_eq!((s.depth(), s.width(), s.fwd()), (1, 0, &[0][..]));
    }

    #[test]
    fn single_row_repeated_matches() {
        // b = "aba", alpha = 'a': matches at columns 0 and 2.
        let s = SeaweedMatrix::single_row(b'a', b"aba");
        assert_eq!(s.fwd(), &[0, 2, 1, 3]);
        assert_eq!(s.inv(), &[0, 2, 1, 3]);
    }

    #[test]
    fn empty_matrix() {
        assert!(SeaweedMatrix::empty(0).fwd().is_empty());
        assert_eq!(SeaweedMatrix::empty(3).fwd(), &[0, 1, 2]);
        assert_eq!(SeaweedMatrix::empty(2).row0_scores(), vec![0, 0, 0]);
    }

    #[test]
    fn substring_scores_of_single_row() {
        let s = SeaweedMatrix::single_row(b'b', b"ab");
        assert_eq!(s.score_substring(0, 2).unwrap(), 1);
        assert_eq!(s.score_substring(0, 1).unwrap(), 0);
        assert_eq!(s.score_substring(1, 2).unwrap(), 1);
        assert_eq!(s.score_substring(1, 1).unwrap(), 0);
        assert_eq!(s.row0_scores(), vec![0, 0, 1]);
        let e = SeaweedMatrix::single_row(b'q', b"");
        assert_eq!(e.row0_scores(), vec![0]);
    }

    #[test]
    fn score_substring_rejects_bad_indices() {
        let s = SeaweedMatrix::single_row(b'b', b"ab");
        assert!(matches!(
            s.score_substring(2, 1),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(s.score_substring(0, 3).is_err());
        assert!(s.counter().score_substring(0, 3).is_err());
    }

    #[test]
    fn from_parts_validates() {
        assert!(SeaweedMatrix::from_parts(1, 1, vec![0, 0]).is_err());
        assert!(SeaweedMatrix::from_parts(1, 1, vec![0]).is_err());
        assert!(SeaweedMatrix::from_parts(1, 1, vec![1, 0]).is_ok());
    }

    #[test]
    fn permutation_from_nonzeros() {
        let p = Permutation::from_nonzeros([(1, 0), (0, 1)]).unwrap();
        assert_eq!(p.cols(), &[1, 0]);
        assert!(Permutation::from_nonzeros([(0, 0), (0, 1)]).is_err());
        assert_eq!(p.inverse(), p);
    }

    #[test]
    fn reversal_is_an_involution() {
        let s = SeaweedMatrix::single_row(b'a', b"abca");
        assert_eq!(s.reversed().reversed(), s);
        // Reversing a one-character row only reverses b.
        assert_eq!(s.reversed(), SeaweedMatrix::single_row(b'a', b"acba"));
    }
}
