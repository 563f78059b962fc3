//! Brute-force enumeration of complete flags and invariant subspaces:
//! the oracle side of every counting identity in this crate.
//!
//! Flags are built incrementally. A `(k+1)`-dimensional extension of
//! `V_k` is chosen by a canonical coset representative: a vector reduced
//! against the RREF basis of `V_k`, zero before its leading position, and
//! with leading coefficient one. Each candidate costs one budget step;
//! exceeding the ceiling is a typed error, never an open-ended run.

use std::collections::BTreeMap;

use crate::algebra::Partition;
use crate::error::{Error, Result};
use crate::gfq::field::{FieldCtx, Fq};
use crate::gfq::matrix::LinearOp;
use crate::gfq::subspace::{subspaces_of_dim, Subspace};
use crate::hessenberg::HessFn;
use crate::symfunc::{Basis, SymFunc};

/// Default ceiling on enumeration steps.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

struct FlagSearch<'a> {
    ctx: &'a FieldCtx,
    op: &'a LinearOp,
    n: usize,
    /// Largest `i` with `m(i) = k`, per `k`; 0 when none.
    check_at: Vec<usize>,
    /// The chain's spanning vectors `w_1, ..., w_k`.
    chain: Vec<Vec<Fq>>,
    steps: u64,
    budget: u64,
}

/// The number of complete flags satisfying `T V_i ⊆ V_{m(i)}` for all `i`.
pub fn count_hessenberg_bruteforce(m: &HessFn, op: &LinearOp, budget: u64) -> Result<u64> {
    if m.n() != op.n {
        return Err(Error::SizeMismatch(m.n(), op.n));
    }
    let n = m.n();
    let mut check_at = vec![0usize; n + 1];
    for i in 1..=n {
        check_at[m.value(i)] = i;
    }
    let mut search = FlagSearch {
        ctx: &op.ctx,
        op,
        n,
        check_at,
        chain: Vec::new(),
        steps: 0,
        budget,
    };
    let mut count = 0u64;
    search.extend(&Subspace::zero(n), &mut count)?;
    Ok(count)
}

impl FlagSearch<'_> {
    fn extend(&mut self, current: &Subspace, count: &mut u64) -> Result<()> {
        let k = current.dim();
        // Conditions that became checkable when V_k was fixed: T V_i ⊆ V_k
        // for the largest i with m(i) = k (smaller i follow by inclusion).
        let top = self.check_at[k];
        if top > 0 {
            for j in 0..top {
                let image = self.op.apply(&self.chain[j]);
                if !current.contains_vector(self.ctx, &image) {
                    return Ok(());
                }
            }
        }
        if k == self.n {
            *count += 1;
            return Ok(());
        }
        // Canonical extension representatives: reduced mod V_k, leading
        // coefficient 1 at a non-pivot position, zero before it.
        let nonpivots: Vec<usize> = (0..self.n)
            .filter(|c| !current.pivots().contains(c))
            .collect();
        let q = self.ctx.q();
        for (idx, &lead) in nonpivots.iter().enumerate() {
            let free: Vec<usize> = nonpivots[idx + 1..].to_vec();
            let total = (q as u128).pow(free.len() as u32);
            let mut assignment = 0u128;
            while assignment < total {
                self.steps += 1;
                if self.steps > self.budget {
                    return Err(Error::BudgetExceeded(self.budget));
                }
                let mut w = vec![0 as Fq; self.n];
                w[lead] = 1;
                let mut v = assignment;
                for &c in &free {
                    w[c] = (v % q as u128) as Fq;
                    v /= q as u128;
                }
                let next = current.extended(self.ctx, &w);
                debug_assert_eq!(next.dim(), k + 1);
                self.chain.push(w);
                self.extend(&next, count)?;
                self.chain.pop();
                assignment += 1;
            }
        }
        Ok(())
    }
}

/// All `T`-invariant subspaces, grouped by dimension.
pub fn invariant_subspaces(op: &LinearOp, budget: u64) -> Result<Vec<Vec<Subspace>>> {
    let n = op.n;
    let mut by_dim = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let mut keep = Vec::new();
        for s in subspaces_of_dim(&op.ctx, n, d, budget)? {
            let invariant = s
                .rows()
                .iter()
                .all(|v| s.contains_vector(&op.ctx, &op.apply(v)));
            if invariant {
                keep.push(s);
            }
        }
        by_dim.push(keep);
    }
    Ok(by_dim)
}

/// For each partition shape, the number of flags of invariant subspaces
/// with the prescribed dimension jumps, ending at the full space.
pub fn flag_counts_by_shape(op: &LinearOp, budget: u64) -> Result<BTreeMap<Partition, u64>> {
    let n = op.n;
    let invariant = invariant_subspaces(op, budget)?;
    let mut out = BTreeMap::new();
    for lam in crate::algebra::partitions_of(n) {
        let dims: Vec<usize> = lam
            .parts()
            .iter()
            .scan(0usize, |acc, &p| {
                *acc += p as usize;
                Some(*acc)
            })
            .collect();
        let count = count_chains(&op.ctx, &invariant, &dims, 0, &Subspace::zero(n));
        out.insert(lam, count);
    }
    Ok(out)
}

fn count_chains(
    ctx: &FieldCtx,
    invariant: &[Vec<Subspace>],
    dims: &[usize],
    level: usize,
    below: &Subspace,
) -> u64 {
    if level == dims.len() {
        return 1;
    }
    let mut total = 0;
    for s in &invariant[dims[level]] {
        if s.contains(ctx, below) {
            total += count_chains(ctx, invariant, dims, level + 1, s);
        }
    }
    total
}

/// The invariant flag generating function of an operator, by brute force:
/// the monomial expansion whose coefficients are the invariant flag counts
/// by shape.
pub fn f_t_bruteforce(op: &LinearOp, budget: u64) -> Result<SymFunc> {
    let counts = flag_counts_by_shape(op, budget)?;
    SymFunc::new(
        op.n,
        Basis::Monomial,
        counts
            .into_iter()
            .map(|(lam, c)| (lam, crate::algebra::ExactScalar::from_bigint(c.into()))),
    )
}
