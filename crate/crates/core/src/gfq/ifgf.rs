//! The invariant flag generating function of a similarity class type, on
//! the symmetric-function side: a product of plethystically substituted
//! modified Hall-Littlewood polynomials.

use crate::error::Result;
use crate::gfq::types::SimilarityClassType;
use crate::symfunc::SymFunc;
use crate::tableaux::hall_littlewood;

/// `F_tau(x;t) = prod_i p_{d_i}[H~_{lambda^i}(x;t)]`, with integer
/// polynomial coefficients in `t`. Specializing `t` to a prime power `q`
/// gives the invariant flag generating function of any operator of type
/// `tau` over `F_q`.
pub fn f_tau(tau: &SimilarityClassType) -> Result<SymFunc> {
    let mut acc = SymFunc::unit();
    for (d, lam) in tau.pairs() {
        let factor = hall_littlewood(lam)?.plethysm_pd(*d as usize)?;
        acc = acc.multiply(&factor)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Partition;
    use crate::symfunc::Basis;

    fn tau(s: &str) -> SimilarityClassType {
        SimilarityClassType::parse(s).unwrap()
    }

    #[test]
    fn single_nilpotent_class_is_hall_littlewood() {
        for parts in [&[3][..], &[2, 1], &[1, 1, 1]] {
            let lam = Partition::new(parts.to_vec()).unwrap();
            let t = SimilarityClassType::new(vec![(1, lam.clone())]).unwrap();
            let f = f_tau(&t).unwrap();
            let hl = hall_littlewood(&lam).unwrap();
            assert!(f.same_function(&hl).unwrap(), "lambda = {lam}");
        }
    }

    #[test]
    fn regular_split_gives_complete_homogeneous() {
        // Minimal = characteristic with linear factors: one part per factor.
        let f = f_tau(&tau("(1,[2]);(1,[1])")).unwrap();
        let h = SymFunc::generator(Basis::Homogeneous, &Partition::new(vec![2, 1]).unwrap());
        assert!(f.same_function(&h).unwrap());
        let f = f_tau(&tau("(1,[3]);(1,[2]);(1,[1])")).unwrap();
        let h = SymFunc::generator(Basis::Homogeneous, &Partition::new(vec![3, 2, 1]).unwrap());
        assert!(f.same_function(&h).unwrap());
    }

    #[test]
    fn regular_semisimple_gives_power_sums() {
        let f = f_tau(&tau("(2,[1]);(1,[1])")).unwrap();
        let p = SymFunc::generator(Basis::Power, &Partition::new(vec![2, 1]).unwrap());
        assert!(f.same_function(&p).unwrap());
        let f = f_tau(&tau("(3,[1])")).unwrap();
        let p = SymFunc::generator(Basis::Power, &Partition::new(vec![3]).unwrap());
        assert!(f.same_function(&p).unwrap());
    }
}
