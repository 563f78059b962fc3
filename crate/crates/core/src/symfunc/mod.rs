//! Symmetric functions of bounded degree as exact finite expansions.
//!
//! A [`SymFunc`] is a homogeneous symmetric function of a fixed degree,
//! stored as a sparse map from partitions of that degree to exact scalar
//! coefficients, tagged with the basis of the expansion. The monomial
//! basis is canonical: pairings and products route through it, and the
//! Hall scalar product reduces to a sparse dot product via the duality
//! of the monomial and complete homogeneous bases.

mod convert;
mod mexp;

pub use convert::{max_degree, set_max_degree, DEFAULT_MAX_DEGREE};

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde_json::json;

use crate::algebra::{ExactScalar, Partition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    Monomial,
    Elementary,
    Homogeneous,
    Power,
    Schur,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Elementary => 'e',
            Basis::Homogeneous => 'h',
            Basis::Power => 'p',
            Basis::Schur => 's',
        }
    }

    pub fn parse(s: &str) -> Result<Basis> {
        match s {
            "m" => Ok(Basis::Monomial),
            "e" => Ok(Basis::Elementary),
            "h" => Ok(Basis::Homogeneous),
            "p" => Ok(Basis::Power),
            "s" => Ok(Basis::Schur),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A homogeneous symmetric function of fixed degree in a tagged basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Partition, ExactScalar>,
}

impl SymFunc {
    pub fn new(
        degree: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, ExactScalar)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Partition, ExactScalar> = BTreeMap::new();
        for (p, c) in terms {
            if p.size() != degree {
                return Err(Error::SizeMismatch(p.size(), degree));
            }
            let entry = map.entry(p).or_insert_with(ExactScalar::zero);
            *entry = entry.add(&c);
        }
        map.retain(|_, c| !c.is_zero());
        Ok(SymFunc {
            degree,
            basis,
            terms: map,
        })
    }

    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The single basis element `B_lambda`.
    pub fn generator(basis: Basis, lambda: &Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda.clone(), ExactScalar::one());
        SymFunc {
            degree: lambda.size(),
            basis,
            terms,
        }
    }

    /// The constant 1, a degree-0 monomial expansion.
    pub fn unit() -> Self {
        Self::generator(Basis::Monomial, &Partition::empty())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, ExactScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> ExactScalar {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    /// Re-express in the monomial basis.
    pub fn to_monomial(&self) -> Result<SymFunc> {
        if self.basis == Basis::Monomial {
            return Ok(self.clone());
        }
        let table = convert::basis_table(self.degree, self.basis)?;
        let mut out: BTreeMap<Partition, ExactScalar> = BTreeMap::new();
        for (lam, c) in &self.terms {
            let row = &table.expansion[table.index[lam]];
            for (j, entry) in row.iter().enumerate() {
                if num_traits::Zero::is_zero(entry) {
                    continue;
                }
                let add = c.mul(&ExactScalar::from_bigint(entry.clone()));
                let slot = out
                    .entry(table.parts[j].clone())
                    .or_insert_with(ExactScalar::zero);
                *slot = slot.add(&add);
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(SymFunc {
            degree: self.degree,
            basis: Basis::Monomial,
            terms: out,
        })
    }

    /// Re-express in `target`, routing through the monomial basis.
    pub fn in_basis(&self, target: Basis) -> Result<SymFunc> {
        if self.basis == target {
            return Ok(self.clone());
        }
        let mono = self.to_monomial()?;
        if target == Basis::Monomial {
            return Ok(mono);
        }
        let table = convert::basis_table(self.degree, target)?;
        let mut out: BTreeMap<Partition, ExactScalar> = BTreeMap::new();
        for (mu, c) in &mono.terms {
            let i = table.index[mu];
            for (j, entry) in table.inverse[i].iter().enumerate() {
                if num_traits::Zero::is_zero(entry) {
                    continue;
                }
                let add = c.mul(&ExactScalar::from_rational(entry.clone()));
                let slot = out
                    .entry(table.parts[j].clone())
                    .or_insert_with(ExactScalar::zero);
                *slot = slot.add(&add);
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(SymFunc {
            degree: self.degree,
            basis: target,
            terms: out,
        })
    }

    /// Hall scalar product, using the duality of the monomial and complete
    /// homogeneous bases.
    pub fn hall_inner(&self, other: &SymFunc) -> Result<ExactScalar> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let f = self.to_monomial()?;
        let g = other.in_basis(Basis::Homogeneous)?;
        let mut acc = ExactScalar::zero();
        for (lam, c) in &f.terms {
            if let Some(d) = g.terms.get(lam) {
                acc = acc.add(&c.mul(d));
            }
        }
        Ok(acc)
    }

    /// The omega involution, swapping the elementary and complete
    /// homogeneous bases.
    pub fn omega(&self) -> Result<SymFunc> {
        let e = self.in_basis(Basis::Elementary)?;
        Ok(SymFunc {
            degree: e.degree,
            basis: Basis::Homogeneous,
            terms: e.terms,
        })
    }

    /// Exact ring product; the result is in the monomial basis and has
    /// degree `deg(self) + deg(other)`.
    pub fn multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        let a = self.to_monomial()?;
        let b = other.to_monomial()?;
        let mut out: BTreeMap<Partition, ExactScalar> = BTreeMap::new();
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                let c = ca.mul(cb);
                for (nu, mult) in mexp::monomial_product(la, lb) {
                    let add = c.mul(&ExactScalar::from_bigint(mult));
                    let slot = out.entry(nu).or_insert_with(ExactScalar::zero);
                    *slot = slot.add(&add);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(SymFunc {
            degree: self.degree + other.degree,
            basis: Basis::Monomial,
            terms: out,
        })
    }

    /// Plethysm by the power sum `p_d`: on the monomial expansion the term
    /// `c(t) m_lambda` maps to `c(t^d) m_{d lambda}`, realizing
    /// `x_j -> x_j^d` and `t -> t^d`.
    pub fn plethysm_pd(&self, d: usize) -> Result<SymFunc> {
        if d == 0 {
            return Err(Error::InvalidInput("plethysm requires d >= 1".into()));
        }
        let mono = self.to_monomial()?;
        let mut out = BTreeMap::new();
        for (lam, c) in &mono.terms {
            out.insert(lam.stretch(d as u32), c.substitute_power(d));
        }
        Ok(SymFunc {
            degree: self.degree * d,
            basis: Basis::Monomial,
            terms: out,
        })
    }

    /// Evaluate every coefficient at `t = q`, exactly.
    pub fn specialize_t(&self, q: &BigRational) -> Result<SymFunc> {
        let mut out = BTreeMap::new();
        for (lam, c) in &self.terms {
            let v = c.eval_t(q)?;
            if !v.is_zero() {
                out.insert(lam.clone(), v);
            }
        }
        Ok(SymFunc {
            degree: self.degree,
            basis: self.basis,
            terms: out,
        })
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale(&self, s: &ExactScalar) -> SymFunc {
        if s.is_zero() {
            return SymFunc::zero(self.degree, self.basis);
        }
        SymFunc {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), c.mul(s)))
                .collect(),
        }
    }

    /// Sum of two expansions in the same basis and degree.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        if self.basis != other.basis {
            return Err(Error::InvalidInput(format!(
                "cannot add {} and {} expansions directly",
                self.basis, other.basis
            )));
        }
        let mut out = self.terms.clone();
        for (p, c) in &other.terms {
            let slot = out.entry(p.clone()).or_insert_with(ExactScalar::zero);
            *slot = slot.add(c);
        }
        out.retain(|_, c| !c.is_zero());
        Ok(SymFunc {
            degree: self.degree,
            basis: self.basis,
            terms: out,
        })
    }

    /// Equality as symmetric functions, comparing monomial expansions.
    pub fn same_function(&self, other: &SymFunc) -> Result<bool> {
        Ok(self.degree == other.degree && self.to_monomial()?.terms == other.to_monomial()?.terms)
    }

    /// Terms in display order: ascending lexicographic partitions, so
    /// `e_{2,1}` prints before `e_{3}`.
    fn display_order(&self) -> Vec<(&Partition, &ExactScalar)> {
        let mut items: Vec<_> = self.terms.iter().collect();
        items.reverse();
        items
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .display_order()
            .into_iter()
            .map(|(p, c)| {
                json!({
                    "partition": p.parts(),
                    "coeff": c.compact(),
                })
            })
            .collect();
        json!({
            "degree": self.degree,
            "basis": self.basis.to_string(),
            "terms": terms,
        })
    }
}

impl fmt::Display for SymFunc {
    /// Textual form like `t*e_{2,1} + (1+t+t^2)*e_{3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let letter = self.basis.letter();
        let mut first = true;
        for (p, c) in self.display_order() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{letter}_{{{p}}}")?;
            } else if c.needs_parens() {
                write!(f, "({})*{letter}_{{{p}}}", c.compact())?;
            } else {
                write!(f, "{}*{letter}_{{{p}}}", c.compact())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntPoly;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn gen(basis: Basis, parts: &[u32]) -> SymFunc {
        SymFunc::generator(basis, &part(parts))
    }

    #[test]
    fn to_monomial_examples() {
        // e_2 = m_{1,1}
        let e2 = gen(Basis::Elementary, &[2]).to_monomial().unwrap();
        assert_eq!(e2.terms().len(), 1);
        assert_eq!(e2.coeff(&part(&[1, 1])), ExactScalar::from_int(1));
        // h_2 = m_2 + m_{1,1}
        let h2 = gen(Basis::Homogeneous, &[2]).to_monomial().unwrap();
        assert_eq!(h2.coeff(&part(&[2])), ExactScalar::from_int(1));
        assert_eq!(h2.coeff(&part(&[1, 1])), ExactScalar::from_int(1));
        // s_{2,1} = m_{2,1} + 2 m_{1,1,1}
        let s21 = gen(Basis::Schur, &[2, 1]).to_monomial().unwrap();
        assert_eq!(s21.coeff(&part(&[2, 1])), ExactScalar::from_int(1));
        assert_eq!(s21.coeff(&part(&[1, 1, 1])), ExactScalar::from_int(2));
    }

    #[test]
    fn from_monomial_examples() {
        // m_{1,1} = e_2
        let f = gen(Basis::Monomial, &[1, 1])
            .in_basis(Basis::Elementary)
            .unwrap();
        assert_eq!(f, gen(Basis::Elementary, &[2]));
        // h_3 = e_{1,1,1} - 2 e_{2,1} + e_3
        let h3 = gen(Basis::Homogeneous, &[3])
            .in_basis(Basis::Elementary)
            .unwrap();
        assert_eq!(h3.coeff(&part(&[1, 1, 1])), ExactScalar::from_int(1));
        assert_eq!(h3.coeff(&part(&[2, 1])), ExactScalar::from_int(-2));
        assert_eq!(h3.coeff(&part(&[3])), ExactScalar::from_int(1));
        // Round trip through the monomial basis is the identity.
        for basis in [
            Basis::Elementary,
            Basis::Homogeneous,
            Basis::Power,
            Basis::Schur,
        ] {
            let f = gen(basis, &[2, 1]);
            assert_eq!(f.to_monomial().unwrap().in_basis(basis).unwrap(), f);
        }
    }

    #[test]
    fn hall_inner_examples() {
        for lam in crate::algebra::partitions_of(4) {
            let m = SymFunc::generator(Basis::Monomial, &lam);
            let h = SymFunc::generator(Basis::Homogeneous, &lam);
            assert_eq!(m.hall_inner(&h).unwrap(), ExactScalar::from_int(1));
        }
        let p3 = gen(Basis::Power, &[3]);
        assert_eq!(p3.hall_inner(&p3).unwrap(), ExactScalar::from_int(3));
        // <h_n, h_{1^n}>: the coefficient of m_{1^n} in h_n is 1.
        let hn = gen(Basis::Homogeneous, &[4]);
        let h1n = gen(Basis::Homogeneous, &[1, 1, 1, 1]);
        assert_eq!(hn.hall_inner(&h1n).unwrap(), ExactScalar::from_int(1));
        assert!(gen(Basis::Power, &[2])
            .hall_inner(&gen(Basis::Power, &[3]))
            .is_err());
    }

    #[test]
    fn omega_examples() {
        // omega e_lambda = h_lambda
        let f = gen(Basis::Elementary, &[2, 1]).omega().unwrap();
        assert_eq!(f, gen(Basis::Homogeneous, &[2, 1]));
        // omega s_{2,1} = s_{2,1} (self-conjugate shape)
        let s = gen(Basis::Schur, &[2, 1]);
        let w = s.omega().unwrap().in_basis(Basis::Schur).unwrap();
        assert_eq!(w, s);
        // omega p_2 = -p_2
        let p2 = gen(Basis::Power, &[2]);
        let w = p2.omega().unwrap().in_basis(Basis::Power).unwrap();
        assert_eq!(w.coeff(&part(&[2])), ExactScalar::from_int(-1));
    }

    #[test]
    fn omega_sends_schur_to_conjugate() {
        for n in 1..=5 {
            for lam in crate::algebra::partitions_of(n) {
                let w = SymFunc::generator(Basis::Schur, &lam)
                    .omega()
                    .unwrap()
                    .in_basis(Basis::Schur)
                    .unwrap();
                assert_eq!(w, SymFunc::generator(Basis::Schur, &lam.conjugate()));
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let e1 = gen(Basis::Elementary, &[1]);
        let sq = e1.multiply(&e1).unwrap();
        assert_eq!(sq.coeff(&part(&[2])), ExactScalar::from_int(1));
        assert_eq!(sq.coeff(&part(&[1, 1])), ExactScalar::from_int(2));
        let h1 = gen(Basis::Homogeneous, &[1]);
        let cube = h1.multiply(&h1).unwrap().multiply(&h1).unwrap();
        assert_eq!(cube.coeff(&part(&[1, 1, 1])), ExactScalar::from_int(6));
        let f = gen(Basis::Schur, &[2, 1]);
        assert!(f
            .multiply(&SymFunc::unit())
            .unwrap()
            .same_function(&f)
            .unwrap());
    }

    #[test]
    fn plethysm_examples() {
        let p1 = gen(Basis::Power, &[1]);
        let p3 = p1.plethysm_pd(3).unwrap();
        assert!(p3.same_function(&gen(Basis::Power, &[3])).unwrap());
        // h_1 = m_1 goes to m_2 = p_2 under d = 2.
        let h1 = gen(Basis::Homogeneous, &[1]);
        assert!(h1
            .plethysm_pd(2)
            .unwrap()
            .same_function(&gen(Basis::Power, &[2]))
            .unwrap());
        // t m_{1,1} -> t^2 m_{2,2}
        let f = SymFunc::new(
            2,
            Basis::Monomial,
            [(part(&[1, 1]), ExactScalar::from_poly(IntPoly::t()))],
        )
        .unwrap();
        let g = f.plethysm_pd(2).unwrap();
        assert_eq!(
            g.coeff(&part(&[2, 2])),
            ExactScalar::from_poly(IntPoly::from_ints(&[0, 0, 1]))
        );
        assert!(f.plethysm_pd(0).is_err());
    }

    #[test]
    fn specialization() {
        let q2 = BigRational::from(num_bigint::BigInt::from(2));
        let f = SymFunc::new(
            3,
            Basis::Elementary,
            [(
                part(&[3]),
                ExactScalar::from_poly(IntPoly::from_ints(&[1, 1, 1])),
            )],
        )
        .unwrap();
        let g = f.specialize_t(&q2).unwrap();
        assert_eq!(g.coeff(&part(&[3])), ExactScalar::from_int(7));
        let zero = SymFunc::zero(3, Basis::Elementary);
        assert!(zero.specialize_t(&q2).unwrap().is_zero());
    }

    #[test]
    fn display_matches_expected_forms() {
        let f = SymFunc::new(
            3,
            Basis::Elementary,
            [
                (
                    part(&[3]),
                    ExactScalar::from_poly(IntPoly::from_ints(&[1, 1, 1])),
                ),
                (part(&[2, 1]), ExactScalar::from_poly(IntPoly::t())),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "t*e_{2,1} + (1+t+t^2)*e_{3}");
        let g = gen(Basis::Elementary, &[1, 1, 1]);
        assert_eq!(g.to_string(), "e_{1,1,1}");
        assert_eq!(SymFunc::zero(2, Basis::Monomial).to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let f = gen(Basis::Elementary, &[2, 1]);
        let v = f.to_json();
        assert_eq!(v["degree"], 3);
        assert_eq!(v["basis"], "e");
        assert_eq!(v["terms"][0]["partition"][0], 2);
        assert_eq!(v["terms"][0]["coeff"], "1");
    }
}
