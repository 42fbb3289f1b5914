use std::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSpec(format!(
                "{parts:?} is not a partition (positive, weakly decreasing)"
            )));
        }
        Ok(Self { parts })
    }

    /// Accepts trailing zeros, which are dropped.
    pub fn from_padded(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_parts(text)?)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// 1-based part, 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Number of columns of odd length.
    pub fn odd_columns(&self) -> u32 {
        self.conjugate().parts.iter().filter(|&&c| c % 2 == 1).count() as u32
    }

    /// `self >= other` in dominance order (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `self ≻ beta`: `self_1 >= beta_1 >= self_2 >= beta_2 >= ...`.
    pub fn interlaces_above(&self, beta: &Partition) -> bool {
        let n = self.len().max(beta.len()) + 1;
        (1..=n).all(|i| self.part(i) >= beta.part(i) && beta.part(i) >= self.part(i + 1))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions with size `<= n` and at most `max_len` parts.
    pub fn all_up_to(n: u32, max_len: usize) -> Vec<Partition> {
        (0..=n)
            .flat_map(Partition::all)
            .filter(|p| p.len() <= max_len)
            .collect()
    }

    /// Partitions `alpha ≻ self` with `|alpha| - |self| <= max_added`.
    pub fn strips_above(&self, max_added: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len() + 1);
        fn rec(
            beta: &Partition,
            i: usize,
            budget: u32,
            cur: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            let l = beta.len();
            if i > l + 1 {
                out.push(Partition::from_padded(cur.clone()).expect("interlacing keeps order"));
                return;
            }
            let lo = beta.part(i);
            let hi = if i == 1 { beta.part(1) + budget } else { beta.part(i - 1).min(lo + budget) };
            for a in lo..=hi {
                cur.push(a);
                rec(beta, i + 1, budget - (a - lo), cur, out);
                cur.pop();
            }
        }
        rec(self, 1, max_added, &mut cur, &mut out);
        out
    }

    /// Partitions `beta ≺ self`.
    pub fn strips_below(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        fn rec(alpha: &Partition, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i > alpha.len() {
                out.push(Partition::from_padded(cur.clone()).expect("interlacing keeps order"));
                return;
            }
            for b in alpha.part(i + 1)..=alpha.part(i) {
                cur.push(b);
                rec(alpha, i + 1, cur, out);
                cur.pop();
            }
        }
        rec(self, 1, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Strictly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidSpec(format!(
                "{parts:?} is not a strict partition"
            )));
        }
        Ok(Self { parts })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_parts(text)?)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.part(1)
    }

    pub fn contains_part(&self, k: u32) -> bool {
        self.parts.contains(&k)
    }

    pub fn as_partition(&self) -> Partition {
        Partition { parts: self.parts.clone() }
    }

    /// All strict partitions of `n`.
    pub fn all(n: u32) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if rem == 0 {
                out.push(StrictPartition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p - 1, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_partition().fmt(f)
    }
}

/// Parses `"3,2,1"`; the empty string is the empty partition.
pub fn parse_parts(text: &str) -> Result<Vec<u32>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part {s:?} in {text:?}")))
        })
        .collect()
}
