use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

/// Raw bytes with trailing line breaks removed, or the sequence of a
/// single-record FASTA file.
pub fn read_sequence(path: &Path, fasta: bool) -> Result<Vec<u8>> {
    let raw = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    if fasta {
        parse_fasta(&raw).with_context(|| format!("in {}", path.display()))
    } else {
        Ok(strip_newline(&raw).to_vec())
    }
}

fn strip_newline(raw: &[u8]) -> &[u8] {
    let end = raw
        .iter()
        .rposition(|&c| c != b'\n' && c != b'\r')
        .map_or(0, |p| p + 1);
    &raw[..end]
}

pub fn parse_fasta(raw: &[u8]) -> Result<Vec<u8>> {
    let mut lines = raw.split(|&c| c == b'\n');
    match lines.next() {
        Some(h) if h.starts_with(b">") => {}
        _ => bail!("FASTA input must start with a '>' header line"),
    }
    let mut seq = Vec::new();
    for line in lines {
        if line.starts_with(b">") {
            bail!("only single-record FASTA is supported");
        }
        seq.extend(line.iter().filter(|c| !c.is_ascii_whitespace()));
    }
    Ok(seq)
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn fields<const N: usize>(line: &str, lineno: usize, what: &str) -> Result<[usize; N]> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != N {
        bail!(
            "line {lineno}: expected {N} fields ({what}), found {}",
            parts.len()
        );
    }
    let mut out = [0usize; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p
            .parse()
            .with_context(|| format!("line {lineno}: '{p}' is not a non-negative integer"))?;
    }
    Ok(out)
}

/// Exons as inclusive 1-based `(i, j)`, in file order.
pub fn parse_exons(text: &str) -> Result<Vec<(usize, usize)>> {
    data_lines(text)
        .map(|(n, l)| fields::<2>(l, n, "start end").map(|[i, j]| (i, j)))
        .collect()
}

pub fn read_exons(path: &Path) -> Result<Vec<(usize, usize)>> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_exons(&text).with_context(|| format!("in {}", path.display()))
}

/// Checks 1-based inclusive exons against `m` and converts them to
/// half-open 0-based intervals.
pub fn to_intervals(exons: &[(usize, usize)], m: usize) -> Result<Vec<(usize, usize)>> {
    exons
        .iter()
        .enumerate()
        .map(|(t, &(i, j))| {
            if i == 0 || i > j || j > m {
                bail!("exon {t} = ({i}, {j}) is not within 1..={m} with start <= end");
            }
            Ok((i - 1, j))
        })
        .collect()
}

/// Queries `exon_id i j`.
pub fn parse_queries(text: &str) -> Result<Vec<(usize, usize, usize)>> {
    data_lines(text)
        .map(|(n, l)| fields::<3>(l, n, "exon_id i j").map(|[e, i, j]| (e, i, j)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newline_stripping() {
        assert_eq!(strip_newline(b"abc\n"), b"abc");
        assert_eq!(strip_newline(b"abc\r\n\n"), b"abc");
        assert_eq!(strip_newline(b"a c"), b"a c");
        assert_eq!(strip_newline(b"\n"), b"");
    }

    #[test]
    fn fasta() {
        assert_eq!(parse_fasta(b">x y\nAC\nGT\n").unwrap(), b"ACGT");
        assert!(parse_fasta(b"ACGT").is_err());
        assert!(parse_fasta(b">a\nAC\n>b\nGT").is_err());
    }

    #[test]
    fn exon_lines() {
        let ex = parse_exons("# header\n1\t1\n\n2 3\n").unwrap();
        assert_eq!(ex, vec![(1, 1), (2, 3)]);
        assert!(parse_exons("1 2 3\n").is_err());
        assert!(parse_exons("1 x\n").is_err());
        assert!(to_intervals(&[(0, 1)], 3).is_err());
        assert!(to_intervals(&[(2, 1)], 3).is_err());
        assert!(to_intervals(&[(1, 4)], 3).is_err());
        assert_eq!(to_intervals(&[(2, 3)], 3).unwrap(), vec![(1, 3)]);
    }

    #[test]
    fn query_lines() {
        assert_eq!(
            parse_queries("0 0 2\n# c\n1 1 1").unwrap(),
            vec![(0, 0, 2), (1, 1, 1)]
        );
        assert!(parse_queries("0 1").is_err());
    }
}
