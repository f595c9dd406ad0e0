//! Seaweed matrices of whole string pairs.

use crate::multiply::compose_balanced;
use crate::seaweed::SeaweedMatrix;

/// Matrix of `a` against `b`, folding one-character rows left to right.
pub fn build(a: &[u8], b: &[u8]) -> SeaweedMatrix {
    a.iter().fold(SeaweedMatrix::empty(b.len()), |acc, &ch| {
        compose_balanced(&acc, &SeaweedMatrix::single_row(ch, b))
            .expect("rows share the width of b")
    })
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn build_examples() {
        assert_eq!(build(b"b", b"ab").score_substring(0, 2).unwrap(), 1);
        assert_eq!(build(b"", b"ab"), SeaweedMatrix::empty(2));
        assert_eq!(build(b"abc", b"abc").row0_scores(), vec![0, 1, 2, 3]);
        assert_eq!(build(b"ab", b"ab").score_substring(0, 2).unwrap(), 2);
        assert_eq!(build(b"b", b"ab").row0_scores(), vec![0, 0, 1]);
        assert_eq!(build(b"abc", b"").row0_scores(), vec![0]);
    }

    #[test]
    fn build_matches_all_substring_oracle() {
        let cases: [(&[u8], &[u8]); 4] = [
            (b"gattaca", b"tacgatacgattac"),
            (b"aaaa", b"aa"),
            (b"abcabcab", b"bacbcabcaabc"),
            (b"x", b"xxyxx"),
        ];
        for (a, b) in cases {
            let s = build(a, b);
            let t = oracle::all_substring_scores(a, b).unwrap();
            for i in 0..=b.len() {
                for j in i..=b.len() {
                    assert_eq!(s.score_substring(i, j).unwrap(), t[i][j], "{i} {j}");
                }
            }
        }
    }
}
