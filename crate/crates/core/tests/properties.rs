//! Property-based and exhaustive invariants spanning the library.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use hessencount_core::algebra::{partitions_of, ExactScalar, IntPoly, Partition};
use hessencount_core::symfunc::{Basis, SymFunc};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

// ---- strategies ----

fn arb_partition(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(move |n| {
        let all = partitions_of(n);
        let len = all.len();
        (0..len).prop_map(move |i| all[i].clone())
    })
}

fn arb_scalar() -> impl Strategy<Value = ExactScalar> {
    prop_oneof![
        (-20i64..=20).prop_map(ExactScalar::from_int),
        ((-20i64..=20), (1i64..=10)).prop_map(|(n, d)| ExactScalar::from_rational(rat(n, d))),
        proptest::collection::vec(-9i64..=9, 0..4)
            .prop_map(|cs| ExactScalar::from_poly(IntPoly::from_ints(&cs))),
        (
            proptest::collection::vec(-6i64..=6, 1..4),
            proptest::collection::vec(-6i64..=6, 1..4)
        )
            .prop_filter_map("nonzero denominator", |(n, d)| {
                let den = IntPoly::from_ints(&d);
                if den.is_zero() {
                    None
                } else {
                    Some(ExactScalar::ratio(IntPoly::from_ints(&n), den).unwrap())
                }
            }),
    ]
}

/// A random symmetric function of the given degree with small integer
/// polynomial coefficients.
fn arb_symfunc(degree: usize, basis: Basis) -> impl Strategy<Value = SymFunc> {
    let parts = partitions_of(degree);
    let len = parts.len();
    proptest::collection::vec(proptest::collection::vec(-5i64..=5, 0..3), len).prop_map(
        move |coeffs| {
            let terms = parts
                .iter()
                .cloned()
                .zip(
                    coeffs
                        .into_iter()
                        .map(|cs| ExactScalar::from_poly(IntPoly::from_ints(&cs))),
                )
                .collect::<Vec<_>>();
            SymFunc::new(degree, basis, terms).unwrap()
        },
    )
}

// ---- scalar properties ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_division_round_trips(a in arb_scalar(), b in arb_scalar()) {
        prop_assume!(!b.is_zero());
        let q = a.div(&b).unwrap();
        prop_assert_eq!(q.mul(&b), a);
    }

    #[test]
    fn scalar_ring_laws(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), ExactScalar::zero());
    }

    #[test]
    fn conjugate_involution(p in arb_partition(10)) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }
}

// ---- symmetric function properties ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn basis_round_trip(
        degree in 1usize..=8,
        which in 0usize..4,
        seed in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 0..3), 0..8)
    ) {
        let basis = [Basis::Elementary, Basis::Homogeneous, Basis::Power, Basis::Schur][which];
        let parts = partitions_of(degree);
        let terms: Vec<_> = parts
            .iter()
            .cloned()
            .zip(seed.into_iter().map(|cs| ExactScalar::from_poly(IntPoly::from_ints(&cs))))
            .collect();
        let f = SymFunc::new(degree, basis, terms).unwrap();
        let back = f.to_monomial().unwrap().in_basis(basis).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn omega_is_an_involution_and_isometry(
        f in (1usize..=8).prop_flat_map(|d| arb_symfunc(d, Basis::Monomial)),
        g_seed in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 0..3), 0..8)
    ) {
        let degree = f.degree();
        let parts = partitions_of(degree);
        let terms: Vec<_> = parts
            .iter()
            .cloned()
            .zip(g_seed.into_iter().map(|cs| ExactScalar::from_poly(IntPoly::from_ints(&cs))))
            .collect();
        let g = SymFunc::new(degree, Basis::Monomial, terms).unwrap();
        let ff = f.omega().unwrap().omega().unwrap();
        prop_assert!(ff.same_function(&f).unwrap());
        let lhs = f.omega().unwrap().hall_inner(&g.omega().unwrap()).unwrap();
        let rhs = f.hall_inner(&g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn plethysm_is_a_ring_map(
        f in (1usize..=3).prop_flat_map(|d| arb_symfunc(d, Basis::Monomial)),
        g in (1usize..=3).prop_flat_map(|d| arb_symfunc(d, Basis::Monomial)),
        d in 1usize..=3
    ) {
        prop_assume!(f.degree() * d + g.degree() * d <= 9);
        let lhs = f.multiply(&g).unwrap().plethysm_pd(d).unwrap();
        let rhs = f.plethysm_pd(d).unwrap().multiply(&g.plethysm_pd(d).unwrap()).unwrap();
        prop_assert!(lhs.same_function(&rhs).unwrap());
    }
}

// ---- exhaustive orthogonality ----

#[test]
fn schur_basis_is_orthonormal() {
    for n in 1..=8 {
        for lam in partitions_of(n) {
            let sl = SymFunc::generator(Basis::Schur, &lam);
            for mu in partitions_of(n) {
                let sm = SymFunc::generator(Basis::Schur, &mu);
                let expect = if lam == mu {
                    ExactScalar::one()
                } else {
                    ExactScalar::zero()
                };
                assert_eq!(sl.hall_inner(&sm).unwrap(), expect, "<s_{lam}, s_{mu}>");
            }
        }
    }
}

#[test]
fn power_sums_are_orthogonal_with_z_norms() {
    fn z_lambda(lam: &Partition) -> BigInt {
        let mut z = BigInt::from(1);
        for (value, mult) in lam.multiplicities() {
            for _ in 0..mult {
                z *= BigInt::from(value);
            }
            for j in 1..=mult as u64 {
                z *= BigInt::from(j);
            }
        }
        z
    }
    for n in 1..=8 {
        for lam in partitions_of(n) {
            let pl = SymFunc::generator(Basis::Power, &lam);
            for mu in partitions_of(n) {
                let pm = SymFunc::generator(Basis::Power, &mu);
                let got = pl.hall_inner(&pm).unwrap();
                let expect = if lam == mu {
                    ExactScalar::from_bigint(z_lambda(&lam))
                } else {
                    ExactScalar::zero()
                };
                assert_eq!(got, expect, "<p_{lam}, p_{mu}>");
            }
        }
    }
}

#[test]
fn hall_duality_of_monomial_and_homogeneous() {
    for n in 1..=8 {
        for lam in partitions_of(n) {
            for mu in partitions_of(n) {
                let m = SymFunc::generator(Basis::Monomial, &lam);
                let h = SymFunc::generator(Basis::Homogeneous, &mu);
                let expect = if lam == mu {
                    ExactScalar::one()
                } else {
                    ExactScalar::zero()
                };
                assert_eq!(m.hall_inner(&h).unwrap(), expect);
            }
        }
    }
}

#[test]
fn tabloid_statistics_agree_up_to_seven() {
    use hessencount_core::tableaux::{enumerate_tabloids, tabloid_val, tabloid_w};
    for n in 1..=7 {
        for lam in partitions_of(n) {
            for mu in partitions_of(n) {
                for theta in enumerate_tabloids(&lam, &mu).unwrap() {
                    assert_eq!(tabloid_w(&theta), tabloid_val(&theta), "{}", theta.text());
                }
            }
        }
    }
}

#[test]
fn csqf_multiplicative_and_degree_bounded_up_to_six() {
    use hessencount_core::hessenberg::{
        csqf, enumerate_hess, irreducible_components, IndifferenceGraph,
    };
    for n in 1..=6 {
        for m in enumerate_hess(n) {
            let x = csqf(&m).unwrap().to_monomial().unwrap();
            // Top power of t is the edge count of the indifference graph.
            let edges = IndifferenceGraph::from_hess(&m).edges().len();
            let max_deg = x
                .terms()
                .values()
                .filter_map(|c| c.to_poly().and_then(|p| p.degree()))
                .max()
                .unwrap();
            assert_eq!(max_deg, edges, "m = {m}");
            // Concatenations multiply.
            let comps = irreducible_components(&m);
            if comps.len() >= 2 {
                let mut prod = csqf(&comps[0]).unwrap();
                for c in &comps[1..] {
                    prod = prod.multiply(&csqf(c).unwrap()).unwrap();
                }
                assert!(prod.same_function(&csqf(&m).unwrap()).unwrap(), "m = {m}");
            }
        }
    }
}
