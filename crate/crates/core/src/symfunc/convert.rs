//! Per-degree basis conversion tables.
//!
//! For each degree `n` and basis `B`, the table holds the integer matrix
//! expanding `B_lambda` in monomials and its exact rational inverse. Rows
//! and columns are indexed by the partitions of `n` in reverse
//! lexicographic order. Tables are computed once and cached; the cache is
//! guarded for one-time initialization and shared across threads.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::symfunc::mexp::monomial_product;
use crate::symfunc::Basis;
use crate::tableaux::kostka_number;

/// Default cap on the degree of cached conversion tables.
pub const DEFAULT_MAX_DEGREE: usize = 12;

static MAX_DEGREE: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DEGREE);

/// Raise or lower the degree cap for conversion tables.
pub fn set_max_degree(cap: usize) {
    MAX_DEGREE.store(cap, Ordering::Relaxed);
}

pub fn max_degree() -> usize {
    MAX_DEGREE.load(Ordering::Relaxed)
}

pub(crate) struct BasisTable {
    /// Partitions of the degree in reverse lexicographic order.
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// Row `i`: expansion of `B_{parts[i]}` in the monomial basis.
    pub expansion: Vec<Vec<BigInt>>,
    /// Inverse of `expansion`, mapping monomial coefficients to `B`.
    pub inverse: Vec<Vec<BigRational>>,
}

type Cache = Mutex<HashMap<(usize, Basis), Arc<BasisTable>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn basis_table(degree: usize, basis: Basis) -> Result<Arc<BasisTable>> {
    let cap = max_degree();
    if degree > cap {
        return Err(Error::DegreeCap(degree, cap));
    }
    if let Some(t) = cache().lock().unwrap().get(&(degree, basis)) {
        return Ok(Arc::clone(t));
    }
    // Build outside the lock; a racing duplicate build is harmless.
    let table = Arc::new(build_table(degree, basis)?);
    let mut guard = cache().lock().unwrap();
    Ok(Arc::clone(guard.entry((degree, basis)).or_insert(table)))
}

fn build_table(degree: usize, basis: Basis) -> Result<BasisTable> {
    let parts = partitions_of(degree);
    let index: HashMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let expansion = match basis {
        Basis::Monomial => identity_matrix(parts.len()),
        Basis::Elementary | Basis::Homogeneous | Basis::Power => {
            multiplicative_rows(&parts, &index, basis)
        }
        Basis::Schur => schur_rows(&parts, &index)?,
    };
    let inverse = invert(&expansion);
    Ok(BasisTable {
        parts,
        index,
        expansion,
        inverse,
    })
}

fn identity_matrix(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Monomial expansion of one generator: `e_k`, `h_k`, or `p_k`.
fn generator_expansion(basis: Basis, k: u32) -> Vec<(Partition, BigInt)> {
    match basis {
        Basis::Elementary => vec![(Partition::column(k as usize), BigInt::one())],
        Basis::Power => vec![(Partition::row(k), BigInt::one())],
        Basis::Homogeneous => partitions_of(k as usize)
            .into_iter()
            .map(|p| (p, BigInt::one()))
            .collect(),
        _ => unreachable!("not a multiplicative basis"),
    }
}

fn multiplicative_rows(
    parts: &[Partition],
    index: &HashMap<Partition, usize>,
    basis: Basis,
) -> Vec<Vec<BigInt>> {
    let mut rows = Vec::with_capacity(parts.len());
    for lam in parts {
        // Fold the generator expansions with monomial products.
        let mut acc: HashMap<Partition, BigInt> = HashMap::new();
        acc.insert(Partition::empty(), BigInt::one());
        for &k in lam.parts() {
            let gen = generator_expansion(basis, k);
            let mut next: HashMap<Partition, BigInt> = HashMap::new();
            for (a, ca) in &acc {
                for (b, cb) in &gen {
                    let coeff = ca * cb;
                    for (nu, mult) in monomial_product(a, b) {
                        *next.entry(nu).or_default() += &coeff * mult;
                    }
                }
            }
            acc = next;
        }
        let mut row = vec![BigInt::zero(); parts.len()];
        for (nu, c) in acc {
            row[index[&nu]] = c;
        }
        rows.push(row);
    }
    rows
}

fn schur_rows(parts: &[Partition], _index: &HashMap<Partition, usize>) -> Result<Vec<Vec<BigInt>>> {
    let mut rows = Vec::with_capacity(parts.len());
    for lam in parts {
        let mut row = Vec::with_capacity(parts.len());
        for mu in parts {
            row.push(BigInt::from(kostka_number(lam, mu)?));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Exact inverse by Gauss-Jordan elimination over the rationals.
fn invert(m: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|c| BigRational::from(c.clone())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("basis transition matrices are invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let d = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &d;
            inv[col][j] /= &d;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let av = &a[col][j] * &f;
                a[r][j] -= av;
                let iv = &inv[col][j] * &f;
                inv[r][j] -= iv;
            }
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn elementary_rows_degree_three() {
        let t = basis_table(3, Basis::Elementary).unwrap();
        // e_3 = m_{1,1,1}
        let r = &t.expansion[t.index[&part(&[3])]];
        assert_eq!(r[t.index[&part(&[1, 1, 1])]], BigInt::from(1));
        assert_eq!(r[t.index[&part(&[3])]], BigInt::from(0));
        // e_{1,1,1} = m_3 + 3 m_{2,1} + 6 m_{1,1,1}
        let r = &t.expansion[t.index[&part(&[1, 1, 1])]];
        assert_eq!(r[t.index[&part(&[3])]], BigInt::from(1));
        assert_eq!(r[t.index[&part(&[2, 1])]], BigInt::from(3));
        assert_eq!(r[t.index[&part(&[1, 1, 1])]], BigInt::from(6));
    }

    #[test]
    fn homogeneous_rows_degree_two() {
        let t = basis_table(2, Basis::Homogeneous).unwrap();
        let r = &t.expansion[t.index[&part(&[2])]];
        assert_eq!(r[t.index[&part(&[2])]], BigInt::from(1));
        assert_eq!(r[t.index[&part(&[1, 1])]], BigInt::from(1));
    }

    #[test]
    fn schur_rows_use_kostka_numbers() {
        let t = basis_table(3, Basis::Schur).unwrap();
        // s_{2,1} = m_{2,1} + 2 m_{1,1,1}
        let r = &t.expansion[t.index[&part(&[2, 1])]];
        assert_eq!(r[t.index[&part(&[3])]], BigInt::from(0));
        assert_eq!(r[t.index[&part(&[2, 1])]], BigInt::from(1));
        assert_eq!(r[t.index[&part(&[1, 1, 1])]], BigInt::from(2));
    }

    #[test]
    fn inverse_matrices_multiply_to_identity() {
        for basis in [
            Basis::Elementary,
            Basis::Homogeneous,
            Basis::Power,
            Basis::Schur,
        ] {
            let t = basis_table(4, basis).unwrap();
            let n = t.parts.len();
            for i in 0..n {
                for j in 0..n {
                    let mut acc = BigRational::zero();
                    for k in 0..n {
                        acc += BigRational::from(t.expansion[i][k].clone()) * &t.inverse[k][j];
                    }
                    let expect = if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(acc, expect, "{basis:?} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        assert!(matches!(
            basis_table(max_degree() + 1, Basis::Elementary),
            Err(Error::DegreeCap(_, _))
        ));
    }
}
