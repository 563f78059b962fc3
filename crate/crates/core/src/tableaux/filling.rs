//! Bijective fillings compatible with a Hessenberg function, and the
//! statistic generating nilpotent Poincaré polynomials.

use num_bigint::BigInt;

use crate::algebra::{IntPoly, Partition};
use crate::error::{Error, Result};
use crate::hessenberg::HessFn;

/// A filling of a Young diagram by `1..=n`, each value used once.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Filling {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Filling {
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

/// All bijective fillings of `dg(lambda)` by `[n]` in which every
/// horizontally adjacent pair `k | j` satisfies `k <= m(j)`, enumerated by
/// backtracking with the constraint applied as each entry is placed.
/// Row-major lexicographic order.
pub fn enumerate_compatible_fillings(lambda: &Partition, m: &HessFn) -> Result<Vec<Filling>> {
    let n = lambda.size();
    if n != m.n() {
        return Err(Error::SizeMismatch(n, m.n()));
    }
    let mut used = vec![false; n + 1];
    let mut rows: Vec<Vec<u32>> = lambda
        .parts()
        .iter()
        .map(|&w| Vec::with_capacity(w as usize))
        .collect();
    let mut out = Vec::new();
    place(lambda, m, 0, 0, &mut rows, &mut used, &mut out);
    Ok(out)
}

fn place(
    shape: &Partition,
    m: &HessFn,
    r: usize,
    c: usize,
    rows: &mut Vec<Vec<u32>>,
    used: &mut [bool],
    out: &mut Vec<Filling>,
) {
    if r == shape.len() {
        out.push(Filling {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    if c == shape.part(r) as usize {
        place(shape, m, r + 1, 0, rows, used, out);
        return;
    }
    let n = shape.size();
    for v in 1..=n as u32 {
        if used[v as usize] {
            continue;
        }
        if c > 0 {
            let left = rows[r][c - 1] as usize;
            if left > m.value(v as usize) {
                continue;
            }
        }
        used[v as usize] = true;
        rows[r].push(v);
        place(shape, m, r, c + 1, rows, used, out);
        rows[r].pop();
        used[v as usize] = false;
    }
}

/// The statistic `v`: pairs of entries `i > k` where `i` lies below `k` in
/// the same column or in a column strictly to the left, and the entry `j`
/// immediately right of `k`, when present, satisfies `i <= m(j)`.
pub fn filling_v(phi: &Filling, m: &HessFn) -> u64 {
    let mut cells = Vec::new();
    for (r, row) in phi.rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            cells.push((r, c, v));
        }
    }
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
            if let Some(j) = phi.entry(rk, ck + 1) {
                if vi as usize > m.value(j as usize) {
                    continue;
                }
            }
            count += 1;
        }
    }
    count
}

/// The Poincaré polynomial of a nilpotent Hessenberg variety as the
/// generating polynomial of `v` over compatible fillings.
pub fn nilpotent_poincare(lambda: &Partition, m: &HessFn) -> Result<IntPoly> {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for phi in enumerate_compatible_fillings(lambda, m)? {
        let v = filling_v(&phi, m) as usize;
        if coeffs.len() <= v {
            coeffs.resize(v + 1, BigInt::from(0));
        }
        coeffs[v] += 1;
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q_factorial;
    use crate::hessenberg::{complete_hess, HessFn};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn hess(values: &[usize]) -> HessFn {
        HessFn::new(values.to_vec()).unwrap()
    }

    #[test]
    fn column_shape_admits_all_fillings() {
        // No horizontal adjacency, so every bijective filling qualifies.
        for n in 1..=4usize {
            let lam = Partition::column(n);
            for m in crate::hessenberg::enumerate_hess(n) {
                let fs = enumerate_compatible_fillings(&lam, &m).unwrap();
                let factorial: usize = (1..=n).product();
                assert_eq!(fs.len(), factorial);
            }
        }
    }

    #[test]
    fn row_shape_under_springer() {
        // "2 1" would need 2 <= m(1) = 1.
        let fs = enumerate_compatible_fillings(&part(&[2]), &HessFn::springer(2)).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].rows(), &[vec![1, 2]]);
        let fs = enumerate_compatible_fillings(&part(&[2]), &HessFn::complete(2)).unwrap();
        assert_eq!(fs.len(), 2);
    }

    #[test]
    fn inversion_generating_function_on_extremes() {
        // Column shape: v counts inversions of the column word, so the sum
        // over all fillings is [n]_t!.
        for n in 1..=4usize {
            let lam = Partition::column(n);
            let m = HessFn::springer(n);
            assert_eq!(nilpotent_poincare(&lam, &m).unwrap(), q_factorial(n));
            // Row shape under the complete function behaves the same way.
            let lam = Partition::row(n as u32);
            let m = HessFn::complete(n);
            assert_eq!(nilpotent_poincare(&lam, &m).unwrap(), q_factorial(n));
        }
    }

    #[test]
    fn regular_nilpotent_springer_fiber_is_a_point() {
        for n in 1..=5usize {
            let got = nilpotent_poincare(&Partition::row(n as u32), &HessFn::springer(n)).unwrap();
            assert_eq!(got, IntPoly::one(), "n = {n}");
        }
    }

    #[test]
    fn named_row_example() {
        let got = nilpotent_poincare(&part(&[3]), &hess(&[2, 3, 3])).unwrap();
        assert_eq!(got, IntPoly::from_ints(&[1, 2, 1]));
        // And the v values behind it: "1 2 3" has none, "1 3 2" and
        // "2 1 3" have one, "3 2 1" has two.
        let fs = enumerate_compatible_fillings(&part(&[3]), &hess(&[2, 3, 3])).unwrap();
        assert_eq!(fs.len(), 4);
        let m = hess(&[2, 3, 3]);
        let vs: Vec<u64> = fs.iter().map(|f| filling_v(f, &m)).collect();
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 1, 2]);
    }

    #[test]
    fn complete_base_matches_hall_pairing_times_factorials() {
        // Against k_mu the statistic generates
        // <H~_lambda, h_mu> * prod [mu_i]_t!.
        use crate::algebra::{q_factorial_partition, ExactScalar};
        use crate::symfunc::{Basis, SymFunc};
        for n in 1..=4 {
            for lam in crate::algebra::partitions_of(n) {
                let hl = crate::tableaux::hall_littlewood(&lam).unwrap();
                for mu in crate::algebra::partitions_of(n) {
                    let m = complete_hess(&mu);
                    let lhs = nilpotent_poincare(&lam, &m).unwrap();
                    let pairing = hl
                        .hall_inner(&SymFunc::generator(Basis::Homogeneous, &mu))
                        .unwrap();
                    let expected = match pairing {
                        ExactScalar::Int(v) => q_factorial_partition(&mu).mul_bigint(&v),
                        other => {
                            let p = other.to_poly().expect("polynomial pairing");
                            &q_factorial_partition(&mu) * &p
                        }
                    };
                    assert_eq!(lhs, expected, "lambda = {lam}, mu = {mu}");
                }
            }
        }
    }
}
