//! Modified Hall-Littlewood polynomials.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::algebra::{ExactScalar, Partition};
use crate::error::Result;
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::ssyt::kostka_foulkes;

fn cache() -> &'static Mutex<HashMap<Partition, SymFunc>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, SymFunc>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The modified Hall-Littlewood polynomial of `lambda`: the Schur
/// expansion whose coefficients are the cocharge generating polynomials
/// over semistandard tableaux with content `lambda`. Values are cached;
/// they are immutable and shared across threads.
pub fn hall_littlewood(lambda: &Partition) -> Result<SymFunc> {
    if let Some(f) = cache().lock().unwrap().get(lambda) {
        return Ok(f.clone());
    }
    let n = lambda.size();
    let mut terms = Vec::new();
    for mu in crate::algebra::partitions_of(n) {
        let kf = kostka_foulkes(&mu, lambda)?;
        if !kf.is_zero() {
            terms.push((mu, ExactScalar::from_poly(kf)));
        }
    }
    let f = SymFunc::new(n, Basis::Schur, terms)?;
    cache()
        .lock()
        .unwrap()
        .entry(lambda.clone())
        .or_insert_with(|| f.clone());
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntPoly;
    use num_rational::BigRational;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_row_is_complete_homogeneous() {
        for n in 1..=6u32 {
            let hl = hall_littlewood(&Partition::row(n)).unwrap();
            let hn = SymFunc::generator(Basis::Homogeneous, &Partition::row(n));
            assert!(hl.same_function(&hn).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn column_of_two() {
        // s_2 + t s_{1,1}
        let hl = hall_littlewood(&part(&[1, 1])).unwrap();
        assert_eq!(hl.coeff(&part(&[2])), ExactScalar::one());
        assert_eq!(
            hl.coeff(&part(&[1, 1])),
            ExactScalar::from_poly(IntPoly::t())
        );
    }

    #[test]
    fn specializes_to_complete_homogeneous_at_one() {
        let one = BigRational::from(num_bigint::BigInt::from(1));
        for n in 1..=5 {
            for lam in crate::algebra::partitions_of(n) {
                let hl = hall_littlewood(&lam).unwrap().specialize_t(&one).unwrap();
                let h = SymFunc::generator(Basis::Homogeneous, &lam);
                assert!(hl.same_function(&h).unwrap(), "lambda = {lam}");
            }
        }
    }

    #[test]
    fn monomial_coefficients_match_tabloid_statistic() {
        // The Hall pairing against h_mu recovers the tabloid polynomial.
        for n in 1..=4 {
            for lam in crate::algebra::partitions_of(n) {
                let hl = hall_littlewood(&lam).unwrap();
                for mu in crate::algebra::partitions_of(n) {
                    let pairing = hl
                        .hall_inner(&SymFunc::generator(Basis::Homogeneous, &mu))
                        .unwrap();
                    let tabloid_poly = crate::tableaux::monomial_coeff_a(&lam, &mu).unwrap();
                    assert_eq!(
                        pairing,
                        ExactScalar::from_poly(tabloid_poly),
                        "lambda = {lam}, mu = {mu}"
                    );
                }
            }
        }
    }
}
