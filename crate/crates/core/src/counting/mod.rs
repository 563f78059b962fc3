//! The headline counting formulas: exact point counts of Hessenberg
//! varieties over finite fields, closed forms for the codimension-one
//! family, Poincaré polynomials of complex Hessenberg varieties, and a
//! cross-verification suite tying the symmetric-function route to the
//! brute-force route.

pub mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::json;

use crate::algebra::{
    partitions_of, q_factorial_at, q_factorial_partition_at, q_int_at, ExactScalar, IntPoly,
    Partition,
};
use crate::error::{Error, Result};
use crate::gfq::{f_tau, factor_prime_power, SimilarityClassType};
use crate::hessenberg::{csqf, modular_base_eval, HessFn};
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::hall_littlewood;

fn rational(q: u64) -> BigRational {
    BigRational::from(BigInt::from(q))
}

fn require_prime_power(q: u64) -> Result<()> {
    factor_prime_power(q)
        .map(|_| ())
        .ok_or(Error::NotPrimePower(q))
}

fn expect_nonnegative_integer(value: ExactScalar, what: &str) -> Result<BigInt> {
    match value {
        ExactScalar::Int(n) if !n.is_negative() => Ok(n),
        other => Err(Error::NotInteger(format!("{what}: {other}"))),
    }
}

/// The Hall-product evaluation `<F_tau(x;q), omega X_{G(m)}(x;q)>` with no
/// realizability gate: for realizable types this is the exact point count
/// of the Hessenberg variety; for the rest it is the same polynomial
/// formula extended past the fields that carry an operator.
pub fn count_points_formula(m: &HessFn, tau: &SimilarityClassType, q: u64) -> Result<BigInt> {
    if m.n() != tau.n() {
        return Err(Error::SizeMismatch(m.n(), tau.n()));
    }
    require_prime_power(q)?;
    let qr = rational(q);
    let f = f_tau(tau)?.specialize_t(&qr)?;
    let x = csqf(m)?.specialize_t(&qr)?.omega()?;
    let v = f.hall_inner(&x)?;
    expect_nonnegative_integer(v, "point count")
}

/// The number of points of the Hessenberg variety of `m` and an operator
/// of similarity class type `tau` over `F_q`, by the Hall scalar product
/// of the invariant flag generating function against the omega image of
/// the chromatic quasisymmetric function at `t = q`.
pub fn count_points(m: &HessFn, tau: &SimilarityClassType, q: u64) -> Result<BigInt> {
    tau.check_realizable(q)?;
    count_points_formula(m, tau, q)
}

/// Closed form for `m = (m(1), n, ..., n)`:
/// `[n-2]_q! ([n]_q [m(1)-1]_q + q^{m(1)-1} [n-m(1)]_q s)` where `s` sums
/// `[l(lambda^i)]_q` over the degree-one pairs (the number of invariant
/// lines).
pub fn count_simple(m: &HessFn, tau: &SimilarityClassType, q: u64) -> Result<BigInt> {
    let n = m.n();
    if n != tau.n() {
        return Err(Error::SizeMismatch(n, tau.n()));
    }
    if n < 2 || m.value(2) != n {
        return Err(Error::InvalidInput(format!(
            "closed form requires m(2) = n, got m = {m}"
        )));
    }
    require_prime_power(q)?;
    let qr = rational(q);
    let m1 = m.value(1);
    let mut s = BigRational::zero();
    for (d, lam) in tau.pairs() {
        if *d == 1 {
            s += q_int_at(lam.len(), &qr);
        }
    }
    let outer = q_factorial_at(n - 2, &qr);
    let term1 = q_int_at(n, &qr) * q_int_at(m1 - 1, &qr);
    let term2 = qr.pow((m1 - 1) as i32) * q_int_at(n - m1, &qr) * s;
    let total = outer * (term1 + term2);
    expect_nonnegative_integer(ExactScalar::from_rational(total), "closed-form count")
}

/// Point count for a regular semisimple operator whose distinct
/// irreducible factors have the degrees of `alpha`:
/// `<p_alpha, omega X_{G(m)}(x;q)>`.
pub fn count_regular_semisimple(m: &HessFn, alpha: &Partition, q: u64) -> Result<BigInt> {
    if m.n() != alpha.size() {
        return Err(Error::SizeMismatch(m.n(), alpha.size()));
    }
    let pairs: Vec<(u32, Partition)> = alpha
        .parts()
        .iter()
        .map(|&d| (d, Partition::row(1)))
        .collect();
    let tau = SimilarityClassType::new(pairs)?;
    tau.check_realizable(q)?;
    require_prime_power(q)?;
    let qr = rational(q);
    let p = SymFunc::generator(Basis::Power, alpha);
    let x = csqf(m)?.specialize_t(&qr)?.omega()?;
    expect_nonnegative_integer(p.hall_inner(&x)?, "regular semisimple count")
}

/// A computed Poincaré polynomial with its context.
#[derive(Clone, Debug)]
pub struct PoincareReport {
    pub m: HessFn,
    /// Jordan type: a multiset of partitions.
    pub jordan: Vec<Partition>,
    /// Coefficients are Betti numbers of the even cohomology.
    pub poly: IntPoly,
    /// Complex dimension, read as the degree of the polynomial.
    pub degree: Option<usize>,
    pub palindromic: bool,
}

impl PoincareReport {
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self.poly.coeffs().iter().map(bigint_json).collect();
        json!({
            "m": self.m.values(),
            "jordan": self.jordan.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
            "poly": coeffs,
            "degree": self.degree,
            "palindromic": self.palindromic,
        })
    }
}

/// The Poincaré polynomial of the complex Hessenberg variety for a
/// triangulable operator of Jordan type `jordan`:
/// `<prod_i H~_{lambda^i}(x;t), omega X_{G(m)}(x;t)>`.
pub fn poincare(m: &HessFn, jordan: &[Partition]) -> Result<PoincareReport> {
    let total: usize = jordan.iter().map(|p| p.size()).sum();
    if total != m.n() {
        return Err(Error::SizeMismatch(total, m.n()));
    }
    let mut prod = SymFunc::unit();
    for lam in jordan {
        prod = prod.multiply(&hall_littlewood(lam)?)?;
    }
    let x = csqf(m)?.omega()?;
    let value = prod.hall_inner(&x)?;
    let poly = value
        .to_poly()
        .ok_or_else(|| Error::NotPolynomial(format!("{value}")))?;
    if poly.coeffs().iter().any(|c| c.is_negative()) {
        return Err(Error::NotInteger(format!(
            "negative Betti coefficient in {poly}"
        )));
    }
    let mut jordan = jordan.to_vec();
    jordan.sort();
    Ok(PoincareReport {
        m: m.clone(),
        jordan,
        degree: poly.degree(),
        palindromic: poly.is_palindromic(),
        poly,
    })
}

/// The Poincaré polynomial for a regular operator with Jordan block sizes
/// `mu`: `<h_mu, omega X_{G(m)}(x;t)>`, with a palindromicity flag.
pub fn poincare_regular(m: &HessFn, mu: &Partition) -> Result<PoincareReport> {
    if mu.size() != m.n() {
        return Err(Error::SizeMismatch(mu.size(), m.n()));
    }
    let h = SymFunc::generator(Basis::Homogeneous, mu);
    let x = csqf(m)?.omega()?;
    let value = h.hall_inner(&x)?;
    let poly = value
        .to_poly()
        .ok_or_else(|| Error::NotPolynomial(format!("{value}")))?;
    Ok(PoincareReport {
        m: m.clone(),
        jordan: vec![mu.clone()],
        degree: poly.degree(),
        palindromic: poly.is_palindromic(),
        poly,
    })
}

/// Point count through the modular-law expansion over complete Hessenberg
/// functions, with base values `[lambda]_q! <F_tau(x;q), h_lambda>`. An
/// independent evaluation path that must agree with [`count_points`].
pub fn count_via_recursion(m: &HessFn, tau: &SimilarityClassType, q: u64) -> Result<BigInt> {
    let n = m.n();
    if n != tau.n() {
        return Err(Error::SizeMismatch(n, tau.n()));
    }
    tau.check_realizable(q)?;
    require_prime_power(q)?;
    let qr = rational(q);
    let f = f_tau(tau)?.specialize_t(&qr)?;
    let mut base = std::collections::BTreeMap::new();
    for lam in partitions_of(n) {
        let pairing = f.hall_inner(&SymFunc::generator(Basis::Homogeneous, &lam))?;
        let factorial = ExactScalar::from_rational(q_factorial_partition_at(&lam, &qr));
        base.insert(lam, pairing.mul(&factorial));
    }
    let value = modular_base_eval(m, &base, &qr)?;
    expect_nonnegative_integer(value, "recursion count")
}

/// Exact interpolation through `(q, value)` points; errors unless the
/// result has integer coefficients.
pub fn interpolate_points(points: &[(u64, BigInt)]) -> Result<IntPoly> {
    let n = points.len();
    if n == 0 {
        return Ok(IntPoly::zero());
    }
    // Newton's divided differences over exact rationals.
    let xs: Vec<BigRational> = points.iter().map(|(q, _)| rational(*q)).collect();
    let mut table: Vec<BigRational> = points
        .iter()
        .map(|(_, v)| BigRational::from(v.clone()))
        .collect();
    let mut coeffs_newton = vec![table[0].clone()];
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = &xs[i] - &xs[i - level];
            if dx.is_zero() {
                return Err(Error::InvalidInput("duplicate interpolation node".into()));
            }
            table[i] = (&table[i] - &table[i - 1]) / dx;
        }
        coeffs_newton.push(table[level].clone());
    }
    // Expand the Newton form into monomial coefficients.
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::from(BigInt::from(1))];
    for (k, c) in coeffs_newton.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            acc[j] += c * b;
        }
        // basis *= (x - xs[k])
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (j, b) in basis.iter().enumerate() {
            next[j + 1] += b;
            next[j] -= b * &xs[k];
        }
        basis = next;
    }
    let mut out = Vec::with_capacity(n);
    for c in acc {
        if !c.denom().eq(&BigInt::from(1)) {
            return Err(Error::NotInteger(format!("coefficient {c}")));
        }
        out.push(c.numer().clone());
    }
    Ok(IntPoly::from_coeffs(out))
}

/// A point-count comparison between the formula and the brute-force
/// oracle.
#[derive(Clone, Debug)]
pub struct CountReport {
    pub m: HessFn,
    pub tau: SimilarityClassType,
    pub q: u64,
    pub formula: BigInt,
    pub bruteforce: Option<u64>,
    pub agree: Option<bool>,
    /// Field metadata for extension fields: (p, e, modulus).
    pub field: Option<(u64, u32, String)>,
}

impl CountReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({
            "m": self.m.values(),
            "type": self.tau.to_string(),
            "q": self.q,
            "formula": bigint_json(&self.formula),
        });
        let obj = v.as_object_mut().unwrap();
        if let Some(b) = self.bruteforce {
            obj.insert("bruteforce".into(), json!(b));
        }
        if let Some(a) = self.agree {
            obj.insert("agree".into(), json!(a));
        }
        if let Some((p, e, modulus)) = &self.field {
            obj.insert("field".into(), json!({"p": p, "e": e, "modulus": modulus}));
        }
        v
    }
}

fn bigint_json(n: &BigInt) -> serde_json::Value {
    match i64::try_from(n.clone()) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}
