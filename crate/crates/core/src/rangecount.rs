//! Static orthogonal range counting.
//!
//! [`MergeTree`] is a merge-sort tree laid out level by level: level `l`
//! holds the input sequence with every aligned block of `2^l` positions
//! sorted. A position range splits into at most two blocks per level, and
//! each block is counted with two binary searches, so a query costs
//! O(log² n) after an O(n log n) build.

use std::ops::Range;

#[derive(Debug, Clone)]
pub struct MergeTree {
    len: usize,
    levels: Vec<Vec<u32>>,
}

impl MergeTree {
    pub fn new(values: &[u32]) -> Self {
        let len = values.len();
        let mut levels = vec![values.to_vec()];
        let mut size = 1usize;
        while size < len {
            let prev = levels.last().unwrap();
            let mut next = Vec::with_capacity(len);
            for start in (0..len).step_by(2 * size) {
                let mid = (start + size).min(len);
                let end = (start + 2 * size).min(len);
                merge_into(&prev[start..mid], &prev[mid..end], &mut next);
            }
            levels.push(next);
            size *= 2;
        }
        MergeTree { len, levels }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of positions `p` in `positions` whose value lies in `values`.
    pub fn count(&self, positions: Range<usize>, values: Range<u32>) -> usize {
        let (mut l, mut r) = (positions.start, positions.end.min(self.len));
        if l >= r || values.start >= values.end {
            return 0;
        }
        let mut total = 0;
        let mut level = 0;
        while l < r {
            let size = 1usize << level;
            if (l >> level) & 1 == 1 {
                total += count_sorted(&self.levels[level][l..l + size], &values);
                l += size;
            }
            if l < r && (r >> level) & 1 == 1 {
                r -= size;
                total += count_sorted(&self.levels[level][r..r + size], &values);
            }
            level += 1;
        }
        total
    }
}

fn merge_into(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

fn count_sorted(block: &[u32], values: &Range<u32>) -> usize {
    block.partition_point(|&v| v < values.end) - block.partition_point(|&v| v < values.start)
}

/// A static set of integer points in the plane with box counting.
#[derive(Debug, Clone)]
pub struct PointCounter {
    xs: Vec<u32>,
    tree: MergeTree,
}

impl PointCounter {
    pub fn new(points: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut points: Vec<(u32, u32)> = points.into_iter().collect();
        points.sort_unstable();
        let xs = points.iter().map(|p| p.0).collect();
        let ys: Vec<u32> = points.iter().map(|p| p.1).collect();
        PointCounter {
            xs,
            tree: MergeTree::new(&ys),
        }
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// Number of points with `x` in `xr` and `y` in `yr`.
    pub fn count(&self, xr: Range<u32>, yr: Range<u32>) -> usize {
        let lo = self.xs.partition_point(|&x| x < xr.start);
        let hi = self.xs.partition_point(|&x| x < xr.end);
        self.tree.count(lo..hi, yr)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn naive(values: &[u32], positions: Range<usize>, vr: Range<u32>) -> usize {
        values[positions.start..positions.end.min(values.len())]
            .iter()
            .filter(|v| vr.contains(v))
            .count()
    }

    #[test]
    fn empty_tree_counts_zero() {
        let t = MergeTree::new(&[]);
        assert_eq!(t.count(0..10, 0..10), 0);
    }

    #[test]
    fn matches_naive_on_odd_lengths() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for len in [1usize, 2, 3, 5, 17, 100, 129] {
            let values: Vec<u32> = (0..len).map(|_| rng.gen_range(0..40)).collect();
            let tree = MergeTree::new(&values);
            for _ in 0..300 {
                let a = rng.gen_range(0..=len);
                let b = rng.gen_range(a..=len);
                let c = rng.gen_range(0..45);
                let d = rng.gen_range(c..=45);
                assert_eq!(tree.count(a..b, c..d), naive(&values, a..b, c..d));
            }
        }
    }

    #[test]
    fn point_counter_with_repeated_x() {
        let pts = [(0, 3), (0, 1), (2, 2), (2, 2), (5, 0)];
        let pc = PointCounter::new(pts);
        assert_eq!(pc.count(0..1, 0..4), 2);
        assert_eq!(pc.count(2..3, 2..3), 2);
        assert_eq!(pc.count(0..6, 0..1), 1);
        assert_eq!(pc.count(1..2, 0..10), 0);
    }
}
