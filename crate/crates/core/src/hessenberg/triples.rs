//! The modular law: triple generation and the expansion of a
//! modular-law-satisfying function over complete Hessenberg functions.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::algebra::{q_factorial_partition_at, ExactScalar, Partition};
use crate::error::{Error, Result};
use crate::hessenberg::{csqf, enumerate_hess, HessFn};

/// A triple `(m0, m1, m2)` witnessing one of the two modular-law
/// conditions at an index `i`, under the convention `m(0) = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModularTriple {
    pub m0: HessFn,
    pub m1: HessFn,
    pub m2: HessFn,
    /// Which condition produced the triple: 1 or 2.
    pub condition: u8,
    /// The 1-based index `i` at which the condition holds.
    pub index: usize,
}

/// Every modular triple on `[n]`.
///
/// Condition 1 at `i`: `m1(i-1) < m1(i) < m1(i+1)` and
/// `m1(m1(i)) = m1(m1(i)+1)`; the companions move `m1(i)` down and up by
/// one. Condition 2 at `i`: `m1(i+1) = m1(i) + 1` and no `j` has
/// `m1(j) = i`; the companions level positions `i, i+1` at `m1(i)` and
/// `m1(i+1)` respectively.
pub fn modular_triples(n: usize) -> Vec<ModularTriple> {
    let mut out = Vec::new();
    for m1 in enumerate_hess(n) {
        for i in 1..n {
            let prev = if i == 1 { 0 } else { m1.value(i - 1) };
            let cur = m1.value(i);
            let next = m1.value(i + 1);

            if prev < cur && cur < next && m1.value(cur) == m1.value(cur + 1) {
                let mut v0 = m1.values().to_vec();
                v0[i - 1] = cur - 1;
                let mut v2 = m1.values().to_vec();
                v2[i - 1] = cur + 1;
                out.push(ModularTriple {
                    m0: HessFn::new(v0).expect("condition 1 keeps validity"),
                    m1: m1.clone(),
                    m2: HessFn::new(v2).expect("condition 1 keeps validity"),
                    condition: 1,
                    index: i,
                });
            }

            if next == cur + 1 && !m1.values().contains(&i) {
                let mut v0 = m1.values().to_vec();
                v0[i - 1] = cur;
                v0[i] = cur;
                let mut v2 = m1.values().to_vec();
                v2[i - 1] = next;
                v2[i] = next;
                out.push(ModularTriple {
                    m0: HessFn::new(v0).expect("condition 2 keeps validity"),
                    m1: m1.clone(),
                    m2: HessFn::new(v2).expect("condition 2 keeps validity"),
                    condition: 2,
                    index: i,
                });
            }
        }
    }
    out
}

/// Evaluate a modular-law-satisfying function at `m` from its values on
/// complete Hessenberg functions: the sum over partitions of
/// `a_{q,lambda}(m) * base(k_lambda) / [lambda]_q!`, computed with exact
/// rationals. `base` must supply a value for every partition of `n`.
pub fn modular_base_eval(
    m: &HessFn,
    base: &BTreeMap<Partition, ExactScalar>,
    q: &BigRational,
) -> Result<ExactScalar> {
    let n = m.n();
    let x = csqf(m)?.specialize_t(q)?;
    let mut acc = ExactScalar::zero();
    for lam in crate::algebra::partitions_of(n) {
        let a = x.coeff(&lam);
        if a.is_zero() {
            continue;
        }
        let value = base.get(&lam).ok_or_else(|| {
            Error::InvalidInput(format!("base value missing for partition {lam}"))
        })?;
        let denom = q_factorial_partition_at(&lam, q);
        if denom == BigRational::from(num_bigint::BigInt::from(0)) {
            return Err(Error::Pole(format!("[{lam}]_q! vanishes at q = {q}")));
        }
        let term = a.mul(value).div(&ExactScalar::from_rational(denom))?;
        acc = acc.add(&term);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::partitions_of;
    use crate::hessenberg::complete_hess;

    fn hess(values: &[usize]) -> HessFn {
        HessFn::new(values.to_vec()).unwrap()
    }

    #[test]
    fn no_triples_below_three() {
        assert!(modular_triples(1).is_empty());
        assert!(modular_triples(2).is_empty());
    }

    #[test]
    fn known_triple_at_three() {
        let triples = modular_triples(3);
        assert!(triples.iter().any(|t| t.condition == 1
            && t.index == 1
            && t.m0 == hess(&[1, 3, 3])
            && t.m1 == hess(&[2, 3, 3])
            && t.m2 == hess(&[3, 3, 3])));
    }

    #[test]
    fn triples_satisfy_their_conditions() {
        for n in 3..=5 {
            for t in modular_triples(n) {
                assert_eq!(t.m0.n(), n);
                match t.condition {
                    1 => {
                        let i = t.index;
                        let prev = if i == 1 { 0 } else { t.m1.value(i - 1) };
                        assert!(prev < t.m1.value(i));
                        assert!(t.m1.value(i) < t.m1.value(i + 1));
                        assert_eq!(t.m0.value(i) + 1, t.m1.value(i));
                        assert_eq!(t.m2.value(i), t.m1.value(i) + 1);
                    }
                    2 => {
                        let i = t.index;
                        assert_eq!(t.m1.value(i + 1), t.m1.value(i) + 1);
                        assert!(!t.m1.values().contains(&i));
                        assert_eq!(t.m0.value(i), t.m1.value(i));
                        assert_eq!(t.m0.value(i + 1), t.m1.value(i));
                        assert_eq!(t.m2.value(i), t.m1.value(i + 1));
                        assert_eq!(t.m2.value(i + 1), t.m1.value(i + 1));
                    }
                    other => panic!("unexpected condition {other}"),
                }
            }
        }
    }

    #[test]
    fn symbolic_modular_law_small() {
        // (1 + t) X_{m1} = t X_{m0} + X_{m2}
        use crate::algebra::IntPoly;
        let one_plus_t = ExactScalar::from_poly(IntPoly::from_ints(&[1, 1]));
        let t = ExactScalar::from_poly(IntPoly::t());
        for n in 3..=4 {
            for tr in modular_triples(n) {
                let lhs = csqf(&tr.m1).unwrap().scale(&one_plus_t);
                let rhs = csqf(&tr.m0)
                    .unwrap()
                    .scale(&t)
                    .add(&csqf(&tr.m2).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "triple {tr:?}");
            }
        }
    }

    #[test]
    fn base_expansion_recovers_complete_values() {
        // With base(lambda) = [lambda]_q! * c_lambda, the expansion of a
        // complete function collapses to its own base value.
        let q = BigRational::from(num_bigint::BigInt::from(2));
        let n = 3;
        let mut base = BTreeMap::new();
        for lam in partitions_of(n) {
            let v = q_factorial_partition_at(&lam, &q);
            base.insert(lam, ExactScalar::from_rational(v));
        }
        for lam in partitions_of(n) {
            let m = complete_hess(&lam);
            let got = modular_base_eval(&m, &base, &q).unwrap();
            assert_eq!(got, base[&lam], "lambda = {lam}");
        }
    }

    #[test]
    fn zero_base_gives_zero() {
        let q = BigRational::from(num_bigint::BigInt::from(3));
        let mut base = BTreeMap::new();
        for lam in partitions_of(4) {
            base.insert(lam, ExactScalar::zero());
        }
        for m in enumerate_hess(4) {
            assert!(modular_base_eval(&m, &base, &q).unwrap().is_zero());
        }
    }
}
