//! Tabloids and the two statistics generating the monomial coefficients of
//! modified Hall-Littlewood polynomials.
//!
//! A tabloid has weakly increasing rows and no column condition. Two
//! statistics live here: `w`, counting pairs subject to a right-neighbor
//! bound, and `val`, summing per-entry values. They agree tabloid by
//! tabloid, and either one generates the monomial coefficient
//! `a_{lambda,mu}(t)` without touching cocharge, which makes this module
//! the oracle certifying the cocharge convention.

use num_bigint::BigInt;

use crate::algebra::{IntPoly, Partition};
use crate::error::{Error, Result};

/// A filling of a Young diagram with weakly increasing rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tabloid {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tabloid {
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.len() {
            return Err(Error::InvalidTableau(format!(
                "expected {} rows, got {}",
                shape.len(),
                rows.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.part(r) as usize {
                return Err(Error::InvalidTableau(format!(
                    "row {r} has length {}, expected {}",
                    row.len(),
                    shape.part(r)
                )));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {r} is not weakly increasing: {row:?}"
                )));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
        }
        Ok(Tabloid { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<u32> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    /// Textual form: rows separated by "/", entries by spaces.
    pub fn text(&self) -> String {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" / ")
    }
}

/// All tabloids of the given shape and content, in row-major lexicographic
/// order.
pub fn enumerate_tabloids(shape: &Partition, content: &Partition) -> Result<Vec<Tabloid>> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch(shape.size(), content.size()));
    }
    let mut remaining: Vec<u32> = content.parts().to_vec();
    let mut rows: Vec<Vec<u32>> = shape
        .parts()
        .iter()
        .map(|&w| Vec::with_capacity(w as usize))
        .collect();
    let mut out = Vec::new();
    fill(shape, 0, 0, &mut rows, &mut remaining, &mut out);
    Ok(out)
}

fn fill(
    shape: &Partition,
    r: usize,
    c: usize,
    rows: &mut Vec<Vec<u32>>,
    remaining: &mut Vec<u32>,
    out: &mut Vec<Tabloid>,
) {
    if r == shape.len() {
        out.push(Tabloid {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    if c == shape.part(r) as usize {
        fill(shape, r + 1, 0, rows, remaining, out);
        return;
    }
    let lo = if c > 0 { rows[r][c - 1] } else { 1 };
    for v in lo..=remaining.len() as u32 {
        let idx = (v - 1) as usize;
        if remaining[idx] == 0 {
            continue;
        }
        remaining[idx] -= 1;
        rows[r].push(v);
        fill(shape, r, c + 1, rows, remaining, out);
        rows[r].pop();
        remaining[idx] += 1;
    }
}

/// Count pairs of cells with values `i > k` where `i` lies below `k` in
/// the same column or anywhere in a column strictly to the left of `k`,
/// and the box immediately right of `k`, if filled by `j`, satisfies
/// `i <= j`.
pub fn tabloid_w(theta: &Tabloid) -> u64 {
    let cells = cell_list(theta);
    let mut count = 0u64;
    for &(ri, ci, vi) in &cells {
        for &(rk, ck, vk) in &cells {
            if vi <= vk {
                continue;
            }
            let positioned = (ci == ck && ri > rk) || ci < ck;
            if !positioned {
                continue;
            }
            if let Some(j) = theta.entry(rk, ck + 1) {
                if vi > j {
                    continue;
                }
            }
            count += 1;
        }
    }
    count
}

/// The value of the entry at `(r, c)`: the number of smaller entries
/// in the same column and above, or in the next column to the right and
/// below.
pub fn entry_value(theta: &Tabloid, r: usize, c: usize) -> u64 {
    let x = theta.entry(r, c).expect("cell exists");
    let mut count = 0u64;
    for rr in 0..r {
        if let Some(y) = theta.entry(rr, c) {
            if y < x {
                count += 1;
            }
        }
    }
    for rr in r + 1..theta.rows().len() {
        if let Some(y) = theta.entry(rr, c + 1) {
            if y < x {
                count += 1;
            }
        }
    }
    count
}

/// The value statistic: the sum of entry values.
pub fn tabloid_val(theta: &Tabloid) -> u64 {
    let mut total = 0u64;
    for (r, row) in theta.rows().iter().enumerate() {
        for c in 0..row.len() {
            total += entry_value(theta, r, c);
        }
    }
    total
}

/// The monomial coefficient `a_{lambda,mu}(t)` of the modified
/// Hall-Littlewood polynomial, generated by the `w` statistic over
/// tabloids of shape `lambda` and content `mu`.
pub fn monomial_coeff_a(lambda: &Partition, mu: &Partition) -> Result<IntPoly> {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for theta in enumerate_tabloids(lambda, mu)? {
        let w = tabloid_w(&theta) as usize;
        if coeffs.len() <= w {
            coeffs.resize(w + 1, BigInt::from(0));
        }
        coeffs[w] += 1;
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

fn cell_list(theta: &Tabloid) -> Vec<(usize, usize, u32)> {
    let mut cells = Vec::new();
    for (r, row) in theta.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            cells.push((r, c, v));
        }
    }
    cells
}
