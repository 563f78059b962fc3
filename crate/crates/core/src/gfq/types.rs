//! Similarity class types: the conjugacy data of a linear operator up to
//! the choice of irreducible factors.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::algebra::Partition;
use crate::error::{Error, Result};
use crate::gfq::field::FieldCtx;
use crate::gfq::fqpoly::{companion_matrix, irreducible_polys, num_irreducibles, poly_pow};
use crate::gfq::matrix::{LinearOp, Mat};

/// A multiset of (degree, partition) pairs with total weight
/// `sum d_i |lambda^i|`. Pairs are kept canonically sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimilarityClassType {
    pairs: Vec<(u32, Partition)>,
}

impl SimilarityClassType {
    pub fn new(mut pairs: Vec<(u32, Partition)>) -> Result<Self> {
        if pairs.iter().any(|(d, lam)| *d == 0 || lam.is_empty()) {
            return Err(Error::InvalidInput(
                "similarity class pairs need positive degree and nonempty partition".into(),
            ));
        }
        pairs.sort();
        Ok(SimilarityClassType { pairs })
    }

    pub fn pairs(&self) -> &[(u32, Partition)] {
        &self.pairs
    }

    /// Total weight `sum d_i |lambda^i|`, the dimension of the space.
    pub fn n(&self) -> usize {
        self.pairs
            .iter()
            .map(|(d, lam)| *d as usize * lam.size())
            .sum()
    }

    /// All degrees are 1, so the type is triangulable over any field that
    /// carries it.
    pub fn is_split(&self) -> bool {
        self.pairs.iter().all(|(d, _)| *d == 1)
    }

    /// The partitions of a split type, as a Jordan type multiset.
    pub fn jordan_type(&self) -> Vec<Partition> {
        self.pairs.iter().map(|(_, lam)| lam.clone()).collect()
    }

    /// A type is realizable over `F_q` when, for each degree `d`, the
    /// number of pairs of that degree does not exceed the number of monic
    /// irreducibles of degree `d`.
    pub fn check_realizable(&self, q: u64) -> Result<()> {
        let mut i = 0;
        while i < self.pairs.len() {
            let d = self.pairs[i].0;
            let mut j = i;
            while j < self.pairs.len() && self.pairs[j].0 == d {
                j += 1;
            }
            let mult = (j - i) as u64;
            if BigInt::from(mult) > num_irreducibles(q, d) {
                return Err(Error::Unrealizable(
                    q,
                    format!(
                        "{mult} distinct irreducibles of degree {d} requested, only {} exist",
                        num_irreducibles(q, d)
                    ),
                ));
            }
            i = j;
        }
        Ok(())
    }

    pub fn is_realizable(&self, q: u64) -> bool {
        self.check_realizable(q).is_ok()
    }

    /// Parse the textual form `(1,[2,1]);(2,[1])`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty similarity class type".into()));
        }
        let mut pairs = Vec::new();
        for item in s.split(';') {
            let item = item.trim();
            let inner = item
                .strip_prefix('(')
                .and_then(|x| x.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("expected (d,[parts]), got {item:?}")))?;
            let (d_str, rest) = inner
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected (d,[parts]), got {item:?}")))?;
            let d: u32 = d_str
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree {d_str:?}")))?;
            let rest = rest.trim();
            let parts_str = rest
                .strip_prefix('[')
                .and_then(|x| x.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("expected [parts], got {rest:?}")))?;
            let lam = Partition::parse(parts_str)?;
            pairs.push((d, lam));
        }
        Self::new(pairs).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for SimilarityClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, lam) in &self.pairs {
            if !first {
                write!(f, ";")?;
            }
            write!(f, "({d},[{lam}])")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SimilarityClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimilarityClassType({self})")
    }
}

/// All similarity class types of weight `n` realizable over `F_q`,
/// deduplicated as multisets, in a deterministic order.
pub fn enumerate_types(n: usize, q: u64) -> Vec<SimilarityClassType> {
    // For each degree d choose a multiset of partitions; weight d per unit.
    let mut out = Vec::new();
    let mut pairs: Vec<(u32, Partition)> = Vec::new();
    rec(1, n, q, &mut pairs, &mut out);
    out.sort_by(|a, b| a.pairs.cmp(&b.pairs));
    out
}

fn rec(
    d: u32,
    remaining: usize,
    q: u64,
    pairs: &mut Vec<(u32, Partition)>,
    out: &mut Vec<SimilarityClassType>,
) {
    if remaining == 0 {
        out.push(SimilarityClassType {
            pairs: {
                let mut ps = pairs.clone();
                ps.sort();
                ps
            },
        });
        return;
    }
    if d as usize > remaining {
        return;
    }
    // Choose the multiset of partitions attached to degree d: a weakly
    // decreasing chain in the partition order, weight d per unit,
    // multiplicity bounded by the irreducible count.
    let cap = num_irreducibles(q, d);
    let mut chosen: Vec<Partition> = Vec::new();
    choose_multiset(d, remaining, q, &cap, &mut chosen, pairs, out);
}

fn choose_multiset(
    d: u32,
    remaining: usize,
    q: u64,
    cap: &BigInt,
    chosen: &mut Vec<Partition>,
    pairs: &mut Vec<(u32, Partition)>,
    out: &mut Vec<SimilarityClassType>,
) {
    // Close out degree d and move on.
    let used: usize = chosen.iter().map(|p| p.size()).sum();
    let consumed = used * d as usize;
    let before = pairs.len();
    for lam in chosen.iter() {
        pairs.push((d, lam.clone()));
    }
    rec(d + 1, remaining - consumed, q, pairs, out);
    pairs.truncate(before);

    if BigInt::from(chosen.len() as u64 + 1) > *cap {
        return;
    }
    // Extend the multiset with one more partition, no larger than the
    // last (multiset canonical order).
    let max_size = (remaining - consumed) / d as usize;
    for size in 1..=max_size {
        for lam in crate::algebra::partitions_of(size) {
            if let Some(last) = chosen.last() {
                if lam > *last {
                    continue;
                }
            }
            chosen.push(lam);
            choose_multiset(d, remaining, q, cap, chosen, pairs, out);
            chosen.pop();
        }
    }
}

/// The canonical operator of a similarity class type: a block-diagonal
/// direct sum of companion matrices of `f_i^{lambda_{i,j}}`, where the
/// degree-`d` pairs take the first irreducibles of degree `d` in
/// enumeration order.
pub fn operator_from_type(tau: &SimilarityClassType, ctx: &Arc<FieldCtx>) -> Result<LinearOp> {
    tau.check_realizable(ctx.q())?;
    let mut blocks: Vec<Mat> = Vec::new();
    let mut i = 0;
    while i < tau.pairs.len() {
        let d = tau.pairs[i].0;
        let mut j = i;
        while j < tau.pairs.len() && tau.pairs[j].0 == d {
            j += 1;
        }
        let irreducibles = irreducible_polys(ctx, d)?;
        for (offset, (_, lam)) in tau.pairs[i..j].iter().enumerate() {
            let f = &irreducibles[offset];
            for &part in lam.parts() {
                let power = poly_pow(ctx, f, part);
                blocks.push(companion_matrix(ctx, &power));
            }
        }
        i = j;
    }
    let mat = Mat::block_diag(&blocks);
    Ok(LinearOp::new(Arc::clone(ctx), mat))
}
