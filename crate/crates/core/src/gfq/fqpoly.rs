#![allow(clippy::needless_range_loop)]

//! Polynomials over a finite field: just enough arithmetic to enumerate
//! monic irreducibles and form companion matrices of their powers.
//!
//! A polynomial is a coefficient vector over the field, ascending, with
//! no trailing zeros.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::gfq::field::{FieldCtx, Fq};
use crate::gfq::matrix::Mat;

pub type FqPoly = Vec<Fq>;

fn trim(mut p: FqPoly) -> FqPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn poly_mul(ctx: &FieldCtx, a: &[Fq], b: &[Fq]) -> FqPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0 as Fq; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            out[i + j] = ctx.add(out[i + j], ctx.mul(ca, cb));
        }
    }
    trim(out)
}

/// Remainder of `a` by monic `b`.
pub fn poly_rem(ctx: &FieldCtx, a: &[Fq], b: &[Fq]) -> FqPoly {
    debug_assert_eq!(b.last(), Some(&1), "divisor must be monic");
    let db = b.len() - 1;
    let mut rem: FqPoly = a.to_vec();
    while rem.len() > db {
        let k = rem.len() - 1;
        let c = rem[k];
        if c != 0 {
            for (j, &bc) in b.iter().enumerate().take(db) {
                rem[k - db + j] = ctx.sub(rem[k - db + j], ctx.mul(c, bc));
            }
        }
        rem.pop();
    }
    trim(rem)
}

pub fn poly_pow(ctx: &FieldCtx, a: &[Fq], k: u32) -> FqPoly {
    let mut acc: FqPoly = vec![1];
    for _ in 0..k {
        acc = poly_mul(ctx, &acc, a);
    }
    acc
}

/// All monic irreducible polynomials of degree `d` over the field, in
/// ascending order of the integer encoding of the non-leading coefficient
/// tuple (constant coefficient least significant). Irreducibility by
/// trial division against lower-degree irreducibles.
pub fn irreducible_polys(ctx: &FieldCtx, d: u32) -> Result<Vec<FqPoly>> {
    if d == 0 {
        return Err(Error::InvalidInput("irreducibles require d >= 1".into()));
    }
    let q = ctx.q();
    let mut by_degree: Vec<Vec<FqPoly>> = vec![Vec::new()];
    for deg in 1..=d {
        let deg_us = deg as usize;
        let mut found = Vec::new();
        let count = q.checked_pow(deg).ok_or(Error::FieldTooLarge(q))?;
        for enc in 0..count {
            let mut f: FqPoly = Vec::with_capacity(deg_us + 1);
            let mut v = enc;
            for _ in 0..deg_us {
                f.push((v % q) as Fq);
                v /= q;
            }
            f.push(1);
            let divisible = (1..=deg_us / 2).any(|dd| {
                by_degree
                    .get(dd)
                    .map(|irrs| irrs.iter().any(|g| poly_rem(ctx, &f, g).is_empty()))
                    .unwrap_or(false)
            });
            if !divisible {
                found.push(f);
            }
        }
        by_degree.push(found);
    }
    Ok(by_degree.pop().unwrap())
}

/// Number of monic irreducible polynomials of degree `d` over `F_q`, by
/// the Moebius necklace formula.
pub fn num_irreducibles(q: u64, d: u32) -> BigInt {
    let mut total = BigInt::from(0);
    for e in 1..=d {
        if !d.is_multiple_of(e) {
            continue;
        }
        let mu = moebius(e);
        if mu == 0 {
            continue;
        }
        total += BigInt::from(mu) * BigInt::from(q).pow(d / e);
    }
    total / BigInt::from(d)
}

fn moebius(mut n: u32) -> i32 {
    let mut mu = 1i32;
    let mut p = 2u32;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Companion matrix of a monic polynomial: subdiagonal ones with the
/// negated coefficients in the last column.
pub fn companion_matrix(ctx: &FieldCtx, f: &[Fq]) -> Mat {
    debug_assert_eq!(f.last(), Some(&1), "companion of a monic polynomial");
    let n = f.len() - 1;
    let mut m = Mat::zero(n, n);
    for i in 1..n {
        m.set(i, i - 1, 1);
    }
    for i in 0..n {
        m.set(i, n - 1, ctx.neg(f[i]));
    }
    m
}

/// Render over the prime-field encoding, e.g. `x^3+x+1`.
pub fn poly_string(f: &[Fq]) -> String {
    if f.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (k, &c) in f.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let var = match k {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{k}"),
        };
        let s = match (k, c) {
            (0, c) => c.to_string(),
            (_, 1) => var,
            (_, c) => format!("{c}*{var}"),
        };
        parts.push(s);
    }
    parts.join("+")
}
