//! Integer partitions and compositions.
//!
//! Partitions index everything in this crate: symmetric function bases,
//! Jordan types, flag shapes. The ordering used throughout is reverse
//! lexicographic within a fixed size (so `(4)` precedes `(3,1)` precedes
//! `(2,2)` and so on), which keeps basis matrices and reports reproducible.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition
/// (of 0) is allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts not weakly decreasing: {parts:?}"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part not allowed: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single-row partition `(n)`; the empty partition when `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// Build from an unsorted list of positive parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `i` (0-based), zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 0..cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize > c).count() as u32);
        }
        Partition { parts }
    }

    /// Dominance order: every prefix sum of `self` is at least the matching
    /// prefix sum of `other`. Only meaningful for equal sizes.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return false;
            }
        }
        a == b
    }

    /// Multiset union of parts, e.g. `(3,1) ∪ (2,1) = (3,2,1,1)`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<u32> = self
            .parts
            .iter()
            .chain(other.parts.iter())
            .copied()
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Multiply every part by `d` (plethystic stretching).
    pub fn stretch(&self, d: u32) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| p * d).collect(),
        }
    }

    /// Multiplicity of each part value, as (value, count) pairs.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Parse the textual form "3,1,1"; the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Ord for Partition {
    /// Size first, then reverse lexicographic: within one size, a
    /// lexicographically larger part list sorts earlier.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first and
/// `(1^n)` last. `partitions_of(0)` is `[()]`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(n, n, &mut stack, &mut out);
    out
}

fn gen_partitions(
    remaining: usize,
    max_part: usize,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        stack.push(part as u32);
        gen_partitions(remaining - part, part, stack, out);
        stack.pop();
    }
}

/// A sequence of positive integers where order matters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "zero part not allowed: {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Sort the parts into a partition.
    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone()).expect("positive parts sort to a partition")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}
