//! Hessenberg functions, their Dyck paths and indifference graphs, the
//! chromatic quasisymmetric function, and the modular law machinery.

mod csqf;
mod triples;

pub use csqf::csqf;
pub use triples::{modular_base_eval, modular_triples, ModularTriple};

use std::fmt;

use crate::algebra::Partition;
use crate::error::{Error, Result};

/// A weakly increasing function `m: [n] -> [n]` with `m(i) >= i`,
/// identified with the Dyck path that takes `m(i)` north steps before the
/// `i`-th east step.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HessFn {
    values: Vec<usize>,
}

impl HessFn {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidHessenberg("empty tuple".into()));
        }
        for (i, &v) in values.iter().enumerate() {
            if v < i + 1 {
                return Err(Error::InvalidHessenberg(format!(
                    "m({}) = {v} is below the diagonal",
                    i + 1
                )));
            }
            if v > n {
                return Err(Error::InvalidHessenberg(format!(
                    "m({}) = {v} exceeds n = {n}",
                    i + 1
                )));
            }
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidHessenberg(format!(
                "not weakly increasing: {values:?}"
            )));
        }
        Ok(HessFn { values })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `m(i)` for 1-based `i`.
    pub fn value(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The identity function `(1, 2, ..., n)`.
    pub fn springer(n: usize) -> Self {
        HessFn {
            values: (1..=n).collect(),
        }
    }

    /// The complete function `(n, n, ..., n)`.
    pub fn complete(n: usize) -> Self {
        HessFn { values: vec![n; n] }
    }

    /// Concatenation of Dyck paths.
    pub fn concat(&self, other: &HessFn) -> HessFn {
        let n1 = self.n();
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|&v| v + n1));
        HessFn { values }
    }

    /// Parse either the tuple form "2,3,3" or the Dyck path form "NNENEE".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty hessenberg function".into()));
        }
        if s.chars().all(|c| matches!(c, 'N' | 'E' | 'n' | 'e')) {
            return Self::parse_dyck(s);
        }
        let values = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad value {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values).map_err(|e| Error::Parse(e.to_string()))
    }

    fn parse_dyck(s: &str) -> Result<Self> {
        let mut norths = 0usize;
        let mut values = Vec::new();
        for c in s.chars() {
            match c {
                'N' | 'n' => norths += 1,
                _ => values.push(norths),
            }
        }
        if values.len() != norths {
            return Err(Error::Parse(format!(
                "path has {norths} north and {} east steps",
                values.len()
            )));
        }
        Self::new(values).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The N/E step string of the Dyck path.
    pub fn to_dyck_string(&self) -> String {
        let mut out = String::new();
        let mut norths = 0;
        for &v in &self.values {
            for _ in norths..v {
                out.push('N');
            }
            norths = v;
            out.push('E');
        }
        out
    }
}

impl fmt::Display for HessFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for HessFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HessFn({self})")
    }
}

/// All Hessenberg functions on `[n]`; there are Catalan-many.
pub fn enumerate_hess(n: usize) -> Vec<HessFn> {
    let mut out = Vec::new();
    let mut values = Vec::with_capacity(n);
    fn rec(n: usize, i: usize, values: &mut Vec<usize>, out: &mut Vec<HessFn>) {
        if i > n {
            out.push(HessFn {
                values: values.clone(),
            });
            return;
        }
        let lo = i.max(values.last().copied().unwrap_or(1));
        for v in lo..=n {
            values.push(v);
            rec(n, i + 1, values, out);
            values.pop();
        }
    }
    if n > 0 {
        rec(n, 1, &mut values, &mut out);
    }
    out
}

/// The unique factorization into irreducible Dyck paths: the path splits
/// exactly where it returns to the diagonal, i.e. after each `i` with
/// `m(i) = i`.
pub fn irreducible_components(m: &HessFn) -> Vec<HessFn> {
    let mut out = Vec::new();
    let mut start = 0usize; // 0-based start of the current block
    for i in 0..m.n() {
        if m.values[i] == i + 1 {
            let block: Vec<usize> = m.values[start..=i].iter().map(|&v| v - start).collect();
            out.push(HessFn { values: block });
            start = i + 1;
        }
    }
    out
}

/// The complete Hessenberg function `k_lambda`, a concatenation of
/// complete blocks of the part sizes.
pub fn complete_hess(lambda: &Partition) -> HessFn {
    let mut values = Vec::with_capacity(lambda.size());
    let mut offset = 0usize;
    for &p in lambda.parts() {
        let p = p as usize;
        values.extend(std::iter::repeat_n(offset + p, p));
        offset += p;
    }
    HessFn { values }
}

/// The graph on `[n]` with an edge `{i, j}` whenever `i < j <= m(i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndifferenceGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl IndifferenceGraph {
    pub fn from_hess(m: &HessFn) -> Self {
        let n = m.n();
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=m.value(i) {
                edges.push((i, j));
            }
        }
        IndifferenceGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(i, j)` with `i < j`, 1-based.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}
