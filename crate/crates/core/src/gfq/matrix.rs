#![allow(clippy::needless_range_loop)]

//! Dense matrices over a finite field, with row reduction.

use std::sync::Arc;

use crate::gfq::field::{FieldCtx, Fq};

/// Row-major matrix of field element indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Fq>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Mat {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Fq {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Fq) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Fq] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mat_mul(&self, ctx: &FieldCtx, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let add = ctx.mul(a, other.get(k, j));
                    out.set(i, j, ctx.add(out.get(i, j), add));
                }
            }
        }
        out
    }

    pub fn mat_vec(&self, ctx: &FieldCtx, v: &[Fq]) -> Vec<Fq> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![0 as Fq; self.rows];
        for i in 0..self.rows {
            let mut acc = 0 as Fq;
            for j in 0..self.cols {
                acc = ctx.add(acc, ctx.mul(self.get(i, j), v[j]));
            }
            out[i] = acc;
        }
        out
    }

    /// Inverse of a square matrix, if invertible.
    pub fn inverse(&self, ctx: &FieldCtx) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col) != 0)?;
            for j in 0..n {
                let tmp = a.get(col, j);
                a.set(col, j, a.get(pivot, j));
                a.set(pivot, j, tmp);
                let tmp = inv.get(col, j);
                inv.set(col, j, inv.get(pivot, j));
                inv.set(pivot, j, tmp);
            }
            let d = ctx.inv(a.get(col, col));
            for j in 0..n {
                a.set(col, j, ctx.mul(a.get(col, j), d));
                inv.set(col, j, ctx.mul(inv.get(col, j), d));
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col);
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    let va = ctx.sub(a.get(r, j), ctx.mul(f, a.get(col, j)));
                    a.set(r, j, va);
                    let vi = ctx.sub(inv.get(r, j), ctx.mul(f, inv.get(col, j)));
                    inv.set(r, j, vi);
                }
            }
        }
        Some(inv)
    }

    /// Block-diagonal stacking.
    pub fn block_diag(blocks: &[Mat]) -> Mat {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Mat::zero(n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.rows;
        }
        out
    }
}

/// A linear operator on `F_q^n`.
#[derive(Clone, Debug)]
pub struct LinearOp {
    pub ctx: Arc<FieldCtx>,
    pub n: usize,
    pub mat: Mat,
}

impl LinearOp {
    pub fn new(ctx: Arc<FieldCtx>, mat: Mat) -> Self {
        assert_eq!(mat.n_rows(), mat.n_cols());
        let n = mat.n_rows();
        LinearOp { ctx, n, mat }
    }

    pub fn zero(ctx: Arc<FieldCtx>, n: usize) -> Self {
        LinearOp {
            ctx,
            n,
            mat: Mat::zero(n, n),
        }
    }

    pub fn apply(&self, v: &[Fq]) -> Vec<Fq> {
        self.mat.mat_vec(&self.ctx, v)
    }

    /// Conjugate by an invertible matrix: `P T P^{-1}`.
    pub fn conjugate(&self, p: &Mat) -> Option<LinearOp> {
        let pinv = p.inverse(&self.ctx)?;
        let mat = p.mat_mul(&self.ctx, &self.mat).mat_mul(&self.ctx, &pinv);
        Some(LinearOp {
            ctx: Arc::clone(&self.ctx),
            n: self.n,
            mat,
        })
    }
}

/// Reduce `rows` to reduced row echelon form in place; returns the pivot
/// columns. Zero rows are removed.
pub fn rref(ctx: &FieldCtx, rows: &mut Vec<Vec<Fq>>) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pr) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = ctx.inv(rows[rank][col]);
        for j in col..cols {
            rows[rank][j] = ctx.mul(rows[rank][j], inv);
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col] == 0 {
                continue;
            }
            let f = rows[r][col];
            for j in col..cols {
                let sub = ctx.mul(f, rows[rank][j]);
                rows[r][j] = ctx.sub(rows[r][j], sub);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// Reduce a vector against RREF rows with the given pivots.
pub fn reduce_vector(ctx: &FieldCtx, v: &mut [Fq], rows: &[Vec<Fq>], pivots: &[usize]) {
    for (row, &p) in rows.iter().zip(pivots) {
        let c = v[p];
        if c == 0 {
            continue;
        }
        for j in 0..v.len() {
            let sub = ctx.mul(c, row[j]);
            v[j] = ctx.sub(v[j], sub);
        }
    }
}
