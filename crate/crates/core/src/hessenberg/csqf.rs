//! The chromatic quasisymmetric function of an indifference graph.
//!
//! `X_G(x;t)` sums `t^{asc(kappa)} x_kappa` over proper colorings, where an
//! ascent is an edge `{i, j}` with `i < j` and `kappa(i) < kappa(j)`. For
//! indifference graphs the result is symmetric, so the coefficient of
//! `m_lambda` can be read off one representative monomial: the colorings
//! whose color-count vector is exactly `lambda` in weakly decreasing
//! position. That avoids any division by stabilizer sizes.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::algebra::{ExactScalar, IntPoly, Partition};
use crate::error::Result;
use crate::hessenberg::{HessFn, IndifferenceGraph};
use crate::symfunc::{Basis, SymFunc};

fn cache() -> &'static Mutex<HashMap<HessFn, SymFunc>> {
    static CACHE: OnceLock<Mutex<HashMap<HessFn, SymFunc>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `X_{G(m)}(x;t)` in the elementary basis with integer polynomial
/// coefficients in `t`. Values are cached; they are immutable and shared
/// across threads.
pub fn csqf(m: &HessFn) -> Result<SymFunc> {
    if let Some(x) = cache().lock().unwrap().get(m) {
        return Ok(x.clone());
    }
    let x = csqf_uncached(m)?;
    cache()
        .lock()
        .unwrap()
        .entry(m.clone())
        .or_insert_with(|| x.clone());
    Ok(x)
}

fn csqf_uncached(m: &HessFn) -> Result<SymFunc> {
    let n = m.n();
    let graph = IndifferenceGraph::from_hess(m);
    // Edges into each vertex from smaller neighbors, for incremental
    // properness and ascent counting.
    let mut back_edges: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for &(i, j) in graph.edges() {
        back_edges[j].push(i);
    }

    // asc histogram per content vector, keyed by sorted content partition;
    // only colorings whose content vector is already weakly decreasing
    // count, so each key is hit by exactly the representative monomial.
    let mut histograms: BTreeMap<Partition, Vec<u64>> = BTreeMap::new();
    let mut coloring = vec![0u32; n + 1];
    let mut counts = vec![0u32; n + 1];
    search(
        1,
        n,
        &back_edges,
        &mut coloring,
        &mut counts,
        0,
        &mut histograms,
    );

    let mut terms = Vec::new();
    for (lam, hist) in histograms {
        let coeffs: Vec<BigInt> = hist.into_iter().map(BigInt::from).collect();
        let poly = IntPoly::from_coeffs(coeffs);
        if !poly.is_zero() {
            terms.push((lam, ExactScalar::from_poly(poly)));
        }
    }
    let mono = SymFunc::new(n, Basis::Monomial, terms)?;
    mono.in_basis(Basis::Elementary)
}

#[allow(clippy::too_many_arguments)]
fn search(
    v: usize,
    n: usize,
    back_edges: &[Vec<usize>],
    coloring: &mut [u32],
    counts: &mut [u32],
    asc: usize,
    histograms: &mut BTreeMap<Partition, Vec<u64>>,
) {
    if v > n {
        // Keep only content vectors that are weakly decreasing and have
        // no gaps, i.e. already written as a partition.
        let mut content = Vec::new();
        #[allow(clippy::needless_range_loop)]
        for c in 1..=n {
            if counts[c] == 0 {
                break;
            }
            content.push(counts[c]);
        }
        let used: usize = content.iter().map(|&c| c as usize).sum();
        if used != n || content.windows(2).any(|w| w[0] < w[1]) {
            return;
        }
        let lam = Partition::new(content).expect("weakly decreasing positive");
        let hist = histograms.entry(lam).or_default();
        if hist.len() <= asc {
            hist.resize(asc + 1, 0);
        }
        hist[asc] += 1;
        return;
    }
    'color: for c in 1..=n as u32 {
        let mut new_asc = asc;
        for &u in &back_edges[v] {
            if coloring[u] == c {
                continue 'color;
            }
            if coloring[u] < c {
                new_asc += 1;
            }
        }
        coloring[v] = c;
        counts[c as usize] += 1;
        search(v + 1, n, back_edges, coloring, counts, new_asc, histograms);
        counts[c as usize] -= 1;
        coloring[v] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q_factorial, q_int};
    use crate::hessenberg::enumerate_hess;

    fn hess(values: &[usize]) -> HessFn {
        HessFn::new(values.to_vec()).unwrap()
    }

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn springer_gives_elementary_column() {
        // Empty graph: X = (x_1 + x_2 + ...)^n = e_{1^n}, no ascents.
        for n in 1..=4 {
            let x = csqf(&HessFn::springer(n)).unwrap();
            let e = SymFunc::generator(Basis::Elementary, &Partition::column(n));
            assert_eq!(x, e, "n = {n}");
        }
    }

    #[test]
    fn complete_graph_gives_t_factorial() {
        for n in 1..=4 {
            let x = csqf(&HessFn::complete(n)).unwrap();
            assert_eq!(x.terms().len(), 1);
            assert_eq!(
                x.coeff(&Partition::row(n as u32)),
                ExactScalar::from_poly(q_factorial(n))
            );
        }
    }

    #[test]
    fn path_graph_on_three_vertices() {
        // t e_{2,1} + (1 + t + t^2) e_3
        let x = csqf(&hess(&[2, 3, 3])).unwrap();
        assert_eq!(
            x.coeff(&part(&[2, 1])),
            ExactScalar::from_poly(IntPoly::t())
        );
        assert_eq!(
            x.coeff(&part(&[3])),
            ExactScalar::from_poly(q_int(3).unwrap())
        );
        assert_eq!(x.to_string(), "t*e_{2,1} + (1+t+t^2)*e_{3}");
    }

    #[test]
    fn monomial_coefficients_are_nonnegative_polynomials() {
        for n in 1..=5 {
            for m in enumerate_hess(n) {
                let x = csqf(&m).unwrap().to_monomial().unwrap();
                for (lam, c) in x.terms() {
                    let p = c.to_poly().unwrap_or_else(|| {
                        panic!("non-polynomial coefficient at {lam} for m = {m}")
                    });
                    assert!(
                        p.coeffs().iter().all(|c| c >= &BigInt::from(0)),
                        "negative coefficient at {lam} for m = {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn top_t_power_is_the_edge_count() {
        for n in 1..=5 {
            for m in enumerate_hess(n) {
                let edges = IndifferenceGraph::from_hess(&m).edges().len();
                let x = csqf(&m).unwrap().to_monomial().unwrap();
                let max_deg = x
                    .terms()
                    .values()
                    .filter_map(|c| c.to_poly().and_then(|p| p.degree()))
                    .max()
                    .unwrap();
                assert_eq!(max_deg, edges, "m = {m}");
            }
        }
    }

    #[test]
    fn specialization_at_one_counts_colorings() {
        // X(1^k; 1) equals the number of proper colorings with k colors,
        // counted directly by brute force.
        for m in enumerate_hess(4) {
            let x = csqf(&m).unwrap().to_monomial().unwrap();
            let one = num_rational::BigRational::from(BigInt::from(1));
            for k in 1..=4usize {
                // m_lambda(1^k) = number of distinct arrangements of lambda
                // in k slots.
                let mut total = BigInt::from(0);
                for (lam, c) in x.specialize_t(&one).unwrap().terms() {
                    let v = c.as_int().unwrap().clone();
                    total += v * monomials_in_k_vars(lam, k);
                }
                assert_eq!(
                    total,
                    BigInt::from(count_colorings(&m, k)),
                    "m = {m}, k = {k}"
                );
            }
        }
    }

    fn monomials_in_k_vars(lam: &Partition, k: usize) -> BigInt {
        if lam.len() > k {
            return BigInt::from(0);
        }
        // k! / ((k - l)! * prod multiplicities!)
        let mut num = BigInt::from(1);
        for i in 0..lam.len() {
            num *= BigInt::from((k - i) as u64);
        }
        let mut den = BigInt::from(1);
        for (_, mult) in lam.multiplicities() {
            for j in 1..=mult as u64 {
                den *= BigInt::from(j);
            }
        }
        num / den
    }

    fn count_colorings(m: &HessFn, k: usize) -> u64 {
        let graph = IndifferenceGraph::from_hess(m);
        let n = m.n();
        let mut coloring = vec![0u32; n + 1];
        fn rec(v: usize, n: usize, k: usize, edges: &[(usize, usize)], col: &mut [u32]) -> u64 {
            if v > n {
                return 1;
            }
            let mut total = 0;
            'c: for c in 1..=k as u32 {
                for &(i, j) in edges {
                    if j == v && col[i] == c {
                        continue 'c;
                    }
                }
                col[v] = c;
                total += rec(v + 1, n, k, edges, col);
                col[v] = 0;
            }
            total
        }
        rec(1, n, k, graph.edges(), &mut coloring)
    }

    #[test]
    fn multiplicative_over_concatenation() {
        for n in 2..=5 {
            for m in enumerate_hess(n) {
                let comps = crate::hessenberg::irreducible_components(&m);
                if comps.len() < 2 {
                    continue;
                }
                let mut prod = csqf(&comps[0]).unwrap();
                for c in &comps[1..] {
                    prod = prod.multiply(&csqf(c).unwrap()).unwrap();
                }
                assert!(prod.same_function(&csqf(&m).unwrap()).unwrap(), "m = {m}");
            }
        }
    }
}
