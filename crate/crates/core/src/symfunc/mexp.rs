//! Product of monomial symmetric functions.
//!
//! The coefficient of `m_nu` in `m_lambda * m_mu` is the number of pairs of
//! distinct rearrangements `u` of `lambda` and `v` of `mu` (padded with
//! zeros to a common length) whose sum is exactly the weakly decreasing
//! vector `nu`. Restricting to sums that come out already sorted counts
//! each `nu` once, with no division step.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::Partition;

/// All distinct arrangements of the parts of `p` (padded with zeros) into
/// `slots` positions.
fn distinct_arrangements(p: &Partition, slots: usize) -> Vec<Vec<u32>> {
    let mut values: Vec<u32> = p.parts().to_vec();
    values.resize(slots, 0);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(slots);
    // values is sorted descending; pick a distinct value at each step.
    fn rec(pool: &mut Vec<u32>, current: &mut Vec<u32>, slots: usize, out: &mut Vec<Vec<u32>>) {
        if current.len() == slots {
            out.push(current.clone());
            return;
        }
        let mut last: Option<u32> = None;
        for i in 0..pool.len() {
            let v = pool[i];
            if last == Some(v) {
                continue;
            }
            last = Some(v);
            pool.remove(i);
            current.push(v);
            rec(pool, current, slots, out);
            current.pop();
            pool.insert(i, v);
        }
    }
    rec(&mut values, &mut current, slots, &mut out);
    out
}

/// Structure constants of `m_a * m_b` as partition -> positive multiplicity.
pub(crate) fn monomial_product(a: &Partition, b: &Partition) -> BTreeMap<Partition, BigInt> {
    let slots = a.len() + b.len();
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    if slots == 0 {
        out.insert(Partition::empty(), BigInt::from(1));
        return out;
    }
    let us = distinct_arrangements(a, slots);
    let vs = distinct_arrangements(b, slots);
    for u in &us {
        'pair: for v in &vs {
            let mut sum = Vec::with_capacity(slots);
            let mut prev = u32::MAX;
            for k in 0..slots {
                let s = u[k] + v[k];
                if s > prev {
                    continue 'pair;
                }
                prev = s;
                sum.push(s);
            }
            while sum.last() == Some(&0) {
                sum.pop();
            }
            let nu = Partition::new(sum).expect("weakly decreasing positive parts");
            *out.entry(nu).or_default() += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn square_of_m1() {
        // e_1 * e_1 = m_2 + 2 m_{1,1}
        let prod = monomial_product(&part(&[1]), &part(&[1]));
        assert_eq!(prod.len(), 2);
        assert_eq!(prod[&part(&[2])], BigInt::from(1));
        assert_eq!(prod[&part(&[1, 1])], BigInt::from(2));
    }

    #[test]
    fn identity_and_empty() {
        let prod = monomial_product(&Partition::empty(), &part(&[2, 1]));
        assert_eq!(prod.len(), 1);
        assert_eq!(prod[&part(&[2, 1])], BigInt::from(1));
        let unit = monomial_product(&Partition::empty(), &Partition::empty());
        assert_eq!(unit[&Partition::empty()], BigInt::from(1));
    }

    #[test]
    fn product_with_repeated_parts() {
        // m_{1,1} * m_1 = 3 m_{1,1,1} + m_{2,1}
        let prod = monomial_product(&part(&[1, 1]), &part(&[1]));
        assert_eq!(prod[&part(&[1, 1, 1])], BigInt::from(3));
        assert_eq!(prod[&part(&[2, 1])], BigInt::from(1));
    }
}
