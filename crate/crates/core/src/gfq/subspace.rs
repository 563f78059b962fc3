//! Subspaces of `F_q^n` as canonical reduced-row-echelon bases.

use crate::error::{Error, Result};
use crate::gfq::field::{FieldCtx, Fq};
use crate::gfq::matrix::{reduce_vector, rref};

/// A subspace in canonical form: RREF basis rows plus their pivot columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    n: usize,
    rows: Vec<Vec<Fq>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0 as Fq; n];
                r[i] = 1;
                r
            })
            .collect();
        Subspace {
            n,
            rows,
            pivots: (0..n).collect(),
        }
    }

    /// Canonicalize a spanning set.
    pub fn from_spanning(ctx: &FieldCtx, n: usize, vectors: Vec<Vec<Fq>>) -> Self {
        let mut rows = vectors;
        let pivots = rref(ctx, &mut rows);
        Subspace { n, rows, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Fq>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains_vector(&self, ctx: &FieldCtx, v: &[Fq]) -> bool {
        let mut r = v.to_vec();
        reduce_vector(ctx, &mut r, &self.rows, &self.pivots);
        r.iter().all(|&c| c == 0)
    }

    pub fn contains(&self, ctx: &FieldCtx, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains_vector(ctx, r))
    }

    /// The subspace spanned by this one and an extra vector.
    pub fn extended(&self, ctx: &FieldCtx, v: &[Fq]) -> Subspace {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        let pivots = rref(ctx, &mut rows);
        Subspace {
            n: self.n,
            rows,
            pivots,
        }
    }
}

/// All `d`-dimensional subspaces of `F_q^n`, by direct enumeration of
/// RREF bases: choose pivot columns, then fill the free entries. The
/// count is the Gaussian binomial. Each filled matrix costs one budget
/// step.
pub fn subspaces_of_dim(ctx: &FieldCtx, n: usize, d: usize, budget: u64) -> Result<Vec<Subspace>> {
    if d > n {
        return Ok(Vec::new());
    }
    if d == 0 {
        return Ok(vec![Subspace::zero(n)]);
    }
    let mut out = Vec::new();
    let mut steps = 0u64;
    let mut pivots = Vec::with_capacity(d);
    choose_pivots(ctx, n, d, 0, &mut pivots, &mut out, &mut steps, budget)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn choose_pivots(
    ctx: &FieldCtx,
    n: usize,
    d: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    out: &mut Vec<Subspace>,
    steps: &mut u64,
    budget: u64,
) -> Result<()> {
    if pivots.len() == d {
        fill_free_entries(ctx, n, pivots, out, steps, budget)?;
        return Ok(());
    }
    let remaining = d - pivots.len();
    for col in start..=n - remaining {
        pivots.push(col);
        choose_pivots(ctx, n, d, col + 1, pivots, out, steps, budget)?;
        pivots.pop();
    }
    Ok(())
}

fn fill_free_entries(
    ctx: &FieldCtx,
    n: usize,
    pivots: &[usize],
    out: &mut Vec<Subspace>,
    steps: &mut u64,
    budget: u64,
) -> Result<()> {
    let d = pivots.len();
    // Free positions: (row i, col j) with j > pivots[i] and j not a pivot.
    let mut free = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for j in p + 1..n {
            if !pivots.contains(&j) {
                free.push((i, j));
            }
        }
    }
    let q = ctx.q();
    let mut rows = vec![vec![0 as Fq; n]; d];
    for (i, &p) in pivots.iter().enumerate() {
        rows[i][p] = 1;
    }
    let total = (q as u128).pow(free.len() as u32);
    let mut assignment = 0u128;
    while assignment < total {
        *steps += 1;
        if *steps > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        let mut v = assignment;
        for &(i, j) in &free {
            rows[i][j] = (v % q as u128) as Fq;
            v /= q as u128;
        }
        out.push(Subspace {
            n,
            rows: rows.clone(),
            pivots: pivots.to_vec(),
        });
        assignment += 1;
    }
    Ok(())
}
