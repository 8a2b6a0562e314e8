//! Ordinary and shifted partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-increasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftedPartition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidParameter("partition parts must be positive and nonempty".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!("{parts:?} is not non-increasing")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Boxes `(row, column)`, 1-based, row by row.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(i, &l)| (1..=l).map(move |j| (i + 1, j))).collect()
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.0[0];
        Partition((1..=cols).map(|j| self.0.iter().filter(|&&l| l >= j).count()).collect())
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=max.min(rest)).rev() {
                cur.push(k);
                rec(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl ShiftedPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidParameter("partition parts must be positive and nonempty".into()));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidParameter(format!("{parts:?} is not strictly decreasing")));
        }
        Ok(ShiftedPartition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Boxes `(row, column)` of the shifted diagram: row `i` occupies columns `i..i+λ_i`.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(i, &l)| (i + 1..i + 1 + l).map(move |j| (i + 1, j))).collect()
    }

    /// Componentwise comparison, shorter sequences padded with zeros.
    pub fn le(&self, other: &ShiftedPartition) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All shifted partitions of `n`.
    pub fn all(n: usize) -> Vec<ShiftedPartition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<ShiftedPartition>) {
            if rest == 0 {
                out.push(ShiftedPartition(cur.clone()));
                return;
            }
            for k in (1..=max.min(rest)).rev() {
                cur.push(k);
                rec(rest - k, k - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

/// Parses `a,b^k,...` into a flat list of parts.
fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let bad = |t: &str| Error::InvalidParameter(format!("cannot parse partition part `{t}`"));
    let mut parts = Vec::new();
    for tok in s.trim().trim_start_matches('(').trim_end_matches(')').split(',') {
        let tok = tok.trim();
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim().parse::<usize>().map_err(|_| bad(tok))?),
            None => (tok, 1),
        };
        let b: usize = base.parse().map_err(|_| bad(tok))?;
        parts.extend(std::iter::repeat(b).take(exp));
    }
    Ok(parts)
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl FromStr for ShiftedPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ShiftedPartition::new(parse_parts(s)?)
    }
}

fn write_compressed(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    let mut k = 0;
    let mut first = true;
    while k < parts.len() {
        let mut e = 1;
        while k + e < parts.len() && parts[k + e] == parts[k] {
            e += 1;
        }
        if !first {
            write!(f, ",")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{}", parts[k])?;
        } else {
            write!(f, "{}^{}", parts[k], e)?;
        }
        k += e;
    }
    write!(f, ")")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_compressed(&self.0, f)
    }
}

impl fmt::Display for ShiftedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_compressed(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_exponents() {
        let p: Partition = "2^2,1^3".parse().unwrap();
        assert_eq!(p.parts(), &[2, 2, 1, 1, 1]);
        assert_eq!(p.to_string(), "(2^2,1^3)");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,3".parse::<ShiftedPartition>().is_err());
    }

    #[test]
    fn transpose_examples() {
        let p = Partition::new(vec![4, 2, 1]).unwrap();
        assert_eq!(p.transpose().parts(), &[3, 2, 1, 1]);
        assert_eq!(Partition::new(vec![3]).unwrap().transpose().parts(), &[1, 1, 1]);
        let sq = Partition::new(vec![2, 2]).unwrap();
        assert_eq!(sq.transpose(), sq);
        for part in Partition::all(7) {
            assert_eq!(part.transpose().transpose(), part);
        }
    }

    #[test]
    fn counts_match_partition_numbers() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        let strict: Vec<usize> = (1..=10).map(|n| ShiftedPartition::all(n).len()).collect();
        assert_eq!(strict, vec![1, 1, 2, 2, 3, 4, 5, 6, 8, 10]);
    }

    #[test]
    fn shifted_boxes() {
        let s = ShiftedPartition::new(vec![3, 1]).unwrap();
        assert_eq!(s.boxes(), vec![(1, 1), (1, 2), (1, 3), (2, 2)]);
    }
}
