//! Seaweed matrices for a prescribed set of substrings of `a` against `b`.
//!
//! Phase 1 builds the matrix of every dyadic ("canonical") interval of `a`,
//! bottom-up. Phase 2 walks the square of interval endpoints, split into
//! dyadic blocks. A block `(lo in [i0 - h, i0), hi - 1 in [j0, j0 + h))`
//! is entered only if it holds a prescribed interval; on entry the matrix of
//! the gap `[i0, j0)` shared by every interval in the block is already known
//! (or the gap is empty), and each child block's gap is obtained from it by
//! prepending or appending one canonical interval of length `h / 2`.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::multiply::{compose, compose_balanced};
use crate::rangecount::PointCounter;
use crate::seaweed::{DominanceCounter, SeaweedMatrix};

/// Byte appended to `a` by [`normalize`]; it must not occur in `b`.
pub const PAD: u8 = 0;

/// Distinct candidate intervals `(lo, hi)` of `a`, each standing for the
/// substring `a[lo..hi]`, indexed for box counting.
///
/// Interval `(lo, hi)` is the grid cell `(lo, hi - 1)`; a block
/// `[i0 - h, i0) x [j0, j0 + h)` of cells holds the intervals with
/// `i0 - h <= lo < i0` and `j0 < hi <= j0 + h`.
#[derive(Debug, Clone)]
pub struct PrescribedSet {
    len: usize,
    intervals: Vec<(usize, usize)>,
    index: PointCounter,
}

impl PrescribedSet {
    /// Validates `0 <= lo < hi <= len` and drops duplicates.
    pub fn new(len: usize, intervals: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = intervals.into_iter().collect();
        if let Some(&(lo, hi)) = list.iter().find(|&&(lo, hi)| lo >= hi || hi > len) {
            return Err(Error::InvalidInterval { lo, hi, len });
        }
        list.sort_unstable();
        list.dedup();
        let index = PointCounter::new(list.iter().map(|&(lo, hi)| (lo as u32, (hi - 1) as u32)));
        Ok(PrescribedSet {
            len,
            intervals: list,
            index,
        })
    }

    /// Length of the string the intervals refer to.
    pub fn string_len(&self) -> usize {
        self.len
    }

    /// Sorted, deduplicated intervals.
    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, lo: usize, hi: usize) -> bool {
        self.intervals.binary_search(&(lo, hi)).is_ok()
    }

    /// Intervals with `lo` in `los` and `hi - 1` in `his`.
    pub fn count_box(&self, los: std::ops::Range<usize>, his: std::ops::Range<usize>) -> usize {
        self.index.count(
            los.start as u32..los.end as u32,
            his.start as u32..his.end as u32,
        )
    }

    /// Intervals in the block `[i0 - h, i0) x [j0, j0 + h)`.
    pub fn count_block(&self, i0: usize, j0: usize, h: usize) -> usize {
        self.count_box(i0 - h..i0, j0..j0 + h)
    }
}

/// `a` padded to a power-of-four length, with its prescribed intervals.
#[derive(Debug, Clone)]
pub struct Problem {
    pub a: Vec<u8>,
    pub original_len: usize,
    pub prescribed: PrescribedSet,
}

/// Smallest power of four that is at least `m` (and at least 1).
pub fn padded_len(m: usize) -> usize {
    let mut p = 1;
    while p < m {
        p *= 4;
    }
    p
}

/// Pads `a` with [`PAD`] to a power-of-four length. Padding never falls
/// inside a prescribed interval and never matches `b`, so no score changes.
pub fn normalize(a: &[u8], b: &[u8], intervals: &[(usize, usize)]) -> Result<Problem> {
    if b.contains(&PAD) {
        return Err(Error::ReservedByte(PAD));
    }
    let prescribed = PrescribedSet::new(a.len(), intervals.iter().copied())?;
    let mut padded = a.to_vec();
    padded.resize(padded_len(a.len()), PAD);
    let prescribed = PrescribedSet {
        len: padded.len(),
        ..prescribed
    };
    Ok(Problem {
        a: padded,
        original_len: a.len(),
        prescribed,
    })
}

#[derive(Debug)]
struct Entry {
    matrix: SeaweedMatrix,
    counter: OnceLock<DominanceCounter>,
}

/// Seaweed matrices of substrings of `a`, keyed by interval `(lo, hi)`.
#[derive(Debug, Default)]
pub struct IntervalStore {
    width: usize,
    entries: HashMap<(usize, usize), Entry>,
}

impl IntervalStore {
    pub fn new(width: usize) -> Self {
        IntervalStore {
            width,
            entries: HashMap::new(),
        }
    }

    /// Length of `b`.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, lo: usize, hi: usize) -> bool {
        self.entries.contains_key(&(lo, hi))
    }

    pub fn get(&self, lo: usize, hi: usize) -> Option<&SeaweedMatrix> {
        self.entries.get(&(lo, hi)).map(|e| &e.matrix)
    }

    pub fn matrix(&self, lo: usize, hi: usize) -> Result<&SeaweedMatrix> {
        self.get(lo, hi).ok_or(Error::UnknownInterval { lo, hi })
    }

    pub fn insert(&mut self, lo: usize, hi: usize, matrix: SeaweedMatrix) {
        debug_assert_eq!(matrix.depth(), hi - lo);
        self.entries.entry((lo, hi)).or_insert(Entry {
            matrix,
            counter: OnceLock::new(),
        });
    }

    /// Stored intervals in increasing order.
    pub fn intervals(&self) -> Vec<(usize, usize)> {
        let mut keys: Vec<_> = self.entries.keys().copied().collect();
        keys.sort_unstable();
        keys
    }

    /// Dominance index of a stored matrix, built on first use.
    pub fn counter(&self, lo: usize, hi: usize) -> Result<&DominanceCounter> {
        let e = self
            .entries
            .get(&(lo, hi))
            .ok_or(Error::UnknownInterval { lo, hi })?;
        Ok(e.counter.get_or_init(|| e.matrix.counter()))
    }

    /// LCS of `a[lo..hi]` against `b[i+1..=j]` in O(log² n).
    pub fn query(&self, interval: (usize, usize), i: usize, j: usize) -> Result<usize> {
        self.counter(interval.0, interval.1)?.score_substring(i, j)
    }

    fn canonical(&self, lo: usize, hi: usize) -> &SeaweedMatrix {
        self.get(lo, hi)
            .unwrap_or_else(|| panic!("canonical interval [{lo}, {hi}) missing from phase 1"))
    }
}

/// Builds the matrix of every dyadic interval `[k 2^s, (k+1) 2^s)` inside
/// `a`, one level at a time.
pub fn phase1(a: &[u8], b: &[u8]) -> IntervalStore {
    let mut store = IntervalStore::new(b.len());
    let m = a.len();
    let leaves: Vec<SeaweedMatrix> = a
        .par_iter()
        .map(|&ch| SeaweedMatrix::single_row(ch, b))
        .collect();
    for (k, s) in leaves.into_iter().enumerate() {
        store.insert(k, k + 1, s);
    }
    let mut len = 1;
    while 2 * len <= m {
        let built: Vec<SeaweedMatrix> = (0..m / (2 * len))
            .into_par_iter()
            .map(|k| {
                let lo = 2 * k * len;
                compose(
                    store.canonical(lo, lo + len),
                    store.canonical(lo + len, lo + 2 * len),
                )
                .expect("canonical halves share the width of b")
            })
            .collect();
        for (k, s) in built.into_iter().enumerate() {
            let lo = 2 * k * len;
            store.insert(lo, lo + 2 * len, s);
        }
        len *= 2;
    }
    store
}

/// Order in which the four sub-blocks of a block are visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SiblingOrder {
    #[default]
    Forward,
    Reverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Phase2Options {
    /// Skip blocks that hold no prescribed interval.
    pub prune: bool,
    /// Keep intermediate gap matrices in the store instead of dropping them
    /// once their block is done.
    pub keep_gaps: bool,
    pub order: SiblingOrder,
}

impl Default for Phase2Options {
    fn default() -> Self {
        Phase2Options {
            prune: true,
            keep_gaps: false,
            order: SiblingOrder::Forward,
        }
    }
}

/// Adds the matrix of every prescribed interval to a phase-1 store.
pub fn phase2(
    store: &mut IntervalStore,
    prescribed: &PrescribedSet,
    options: Phase2Options,
) -> Result<()> {
    let m = prescribed.string_len();
    if !m.is_power_of_two() {
        return Err(Error::Invalid(format!(
            "phase 2 needs a power-of-two length, got {m}"
        )));
    }
    let mut walk = BlockWalk {
        store,
        prescribed,
        options,
    };
    if !options.prune || prescribed.count_block(m, 0, m) > 0 {
        walk.block(m, 0, m, None)?;
    }
    Ok(())
}

struct BlockWalk<'a> {
    store: &'a mut IntervalStore,
    prescribed: &'a PrescribedSet,
    options: Phase2Options,
}

impl BlockWalk<'_> {
    /// `gap` is the matrix of `[i0, j0)` when `i0 < j0`.
    fn block(&mut self, i0: usize, j0: usize, h: usize, gap: Option<&SeaweedMatrix>) -> Result<()> {
        if h == 1 {
            let (lo, hi) = (i0 - 1, j0 + 1);
            if self.prescribed.contains(lo, hi) && !self.store.contains(lo, hi) {
                let s = self.extend(gap, i0, j0, lo, hi)?;
                self.store.insert(lo, hi, s);
            }
            return Ok(());
        }
        // Children are extended by h/2, not h: a child block of side h/2 at
        // (i0', j0') needs the gap [i0', j0'] with i0' in {i0 - h/2, i0} and
        // j0' in {j0, j0 + h/2}. This keeps the "gap already processed"
        // invariant true level by level.
        let half = h / 2;
        let mut children = [
            (i0, j0),
            (i0 - half, j0),
            (i0, j0 + half),
            (i0 - half, j0 + half),
        ];
        if self.options.order == SiblingOrder::Reverse {
            children.reverse();
        }
        for (ci, cj) in children {
            if self.options.prune && self.prescribed.count_block(ci, cj, half) == 0 {
                continue;
            }
            if ci >= cj {
                self.block(ci, cj, half, None)?;
            } else if (ci, cj) == (i0, j0) {
                self.block(ci, cj, half, gap)?;
            } else {
                let child_gap = self.extend(gap, i0, j0, ci, cj)?;
                self.block(ci, cj, half, Some(&child_gap))?;
                if self.options.keep_gaps {
                    self.store.insert(ci, cj, child_gap);
                }
            }
        }
        Ok(())
    }

    /// Matrix of `[x, y)` from the matrix of the gap `[i0, j0)` it contains,
    /// or from canonical pieces when the gap is empty.
    fn extend(
        &self,
        gap: Option<&SeaweedMatrix>,
        i0: usize,
        j0: usize,
        x: usize,
        y: usize,
    ) -> Result<SeaweedMatrix> {
        if let Some(s) = self.store.get(x, y) {
            return Ok(s.clone());
        }
        match gap {
            Some(g) if i0 < j0 => {
                debug_assert!(x <= i0 && j0 <= y);
                let mut s = if x < i0 {
                    compose_balanced(self.store.canonical(x, i0), g)?
                } else {
                    g.clone()
                };
                if j0 < y {
                    s = compose_balanced(&s, self.store.canonical(j0, y))?;
                }
                Ok(s)
            }
            _ => {
                let mut s = SeaweedMatrix::empty(self.store.width());
                for (lo, hi) in dyadic_pieces(x, y) {
                    s = compose_balanced(&s, self.store.canonical(lo, hi))?;
                }
                Ok(s)
            }
        }
    }
}

/// Splits `[x, y)` into maximal aligned dyadic intervals, left to right.
pub fn dyadic_pieces(mut x: usize, y: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    while x < y {
        let mut len = if x == 0 {
            (y - x).next_power_of_two()
        } else {
            1 << x.trailing_zeros()
        };
        while x + len > y {
            len /= 2;
        }
        out.push((x, x + len));
        x += len;
    }
    out
}

/// Result of the quasi-local computation: a matrix for every prescribed
/// substring of `a` against `b`.
#[derive(Debug)]
pub struct QuasiLocal {
    pub problem: Problem,
    pub store: IntervalStore,
}

impl QuasiLocal {
    pub fn compute(a: &[u8], b: &[u8], intervals: &[(usize, usize)]) -> Result<Self> {
        Self::compute_with(a, b, intervals, Phase2Options::default())
    }

    pub fn compute_with(
        a: &[u8],
        b: &[u8],
        intervals: &[(usize, usize)],
        options: Phase2Options,
    ) -> Result<Self> {
        let problem = normalize(a, b, intervals)?;
        let mut store = phase1(&problem.a, b);
        phase2(&mut store, &problem.prescribed, options)?;
        Ok(QuasiLocal { problem, store })
    }

    pub fn matrix(&self, lo: usize, hi: usize) -> Result<&SeaweedMatrix> {
        self.store.matrix(lo, hi)
    }

    pub fn query(&self, interval: (usize, usize), i: usize, j: usize) -> Result<usize> {
        self.store.query(interval, i, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcs::build;

    #[test]
    fn padded_lengths() {
        assert_eq!(padded_len(0), 1);
        assert_eq!(padded_len(1), 1);
        assert_eq!(padded_len(3), 4);
        assert_eq!(padded_len(5), 16);
        assert_eq!(padded_len(16), 16);
        assert_eq!(padded_len(17), 64);
    }

    #[test]
    fn normalize_checks_inputs() {
        assert!(matches!(
            normalize(b"abc", b"a\0b", &[]),
            Err(Error::ReservedByte(0))
        ));
        assert!(matches!(
            normalize(b"abc", b"ab", &[(1, 4)]),
            Err(Error::InvalidInterval { .. })
        ));
        assert!(normalize(b"abc", b"ab", &[(2, 2)]).is_err());
        let p = normalize(b"abcde", b"ab", &[(0, 5), (0, 5), (1, 2)]).unwrap();
        assert_eq!(p.a.len(), 16);
        assert_eq!(p.prescribed.len(), 2);
        assert_eq!(&p.a[..5], b"abcde");
    }

    #[test]
    fn padding_does_not_change_scores() {
        let a = b"acgta";
        let b = b"gatcagt";
        let p = normalize(a, b, &[]).unwrap();
        let store = phase1(&p.a, b);
        let whole = store.matrix(0, 16).unwrap();
        let direct = build(a, b);
        assert_eq!(whole.row0_scores(), direct.row0_scores());
        for i in 0..=b.len() {
            for j in i..=b.len() {
                assert_eq!(
                    whole.score_substring(i, j).unwrap(),
                    direct.score_substring(i, j).unwrap()
                );
            }
        }
    }

    #[test]
    fn phase1_stores_every_canonical_interval() {
        let store = phase1(b"abca", b"bcab");
        assert_eq!(store.len(), 4 + 2 + 1);
        for (lo, hi) in store.intervals() {
            assert_eq!(
                store.get(lo, hi).unwrap(),
                &build(&b"abca"[lo..hi], b"bcab")
            );
        }
    }

    #[test]
    fn dyadic_pieces_cover_interval() {
        assert_eq!(dyadic_pieces(0, 8), vec![(0, 8)]);
        assert_eq!(dyadic_pieces(3, 8), vec![(3, 4), (4, 8)]);
        assert_eq!(dyadic_pieces(2, 6), vec![(2, 4), (4, 6)]);
        assert_eq!(dyadic_pieces(5, 5), vec![]);
        assert_eq!(dyadic_pieces(0, 5), vec![(0, 4), (4, 5)]);
    }

    #[test]
    fn no_intervals_leaves_store_unchanged() {
        let ql = QuasiLocal::compute(b"abcd", b"abc", &[]).unwrap();
        assert_eq!(ql.store.len(), 7);
    }

    #[test]
    fn query_examples() {
        let ql = QuasiLocal::compute(b"b", b"ab", &[(0, 1)]).unwrap();
        assert_eq!(ql.query((0, 1), 0, 2).unwrap(), 1);
        assert_eq!(ql.query((0, 1), 1, 1).unwrap(), 0);
        assert!(matches!(
            ql.query((0, 2), 0, 1),
            Err(Error::UnknownInterval { .. })
        ));
        assert!(ql.query((0, 1), 2, 1).is_err());
    }

    #[test]
    fn prescribed_matrices_match_direct_build() {
        let a = b"acbbacabcacbcaab";
        let b = b"abcabcbbacbacaabc";
        let intervals = [
            (0, 16),
            (3, 9),
            (5, 6),
            (2, 13),
            (7, 8),
            (0, 1),
            (15, 16),
            (4, 12),
        ];
        for prune in [true, false] {
            let opts = Phase2Options {
                prune,
                ..Default::default()
            };
            let ql = QuasiLocal::compute_with(a, b, &intervals, opts).unwrap();
            for &(lo, hi) in &intervals {
                assert_eq!(
                    ql.matrix(lo, hi).unwrap(),
                    &build(&a[lo..hi], b),
                    "[{lo},{hi})"
                );
            }
        }
    }
}
