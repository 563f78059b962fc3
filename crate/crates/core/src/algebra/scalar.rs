//! Exact scalar values: integers, rationals, polynomials in `t`, and
//! rational functions in `t`.
//!
//! Every value is normalized to the lowest rung it fits on (an integral
//! rational becomes an integer, a constant polynomial becomes an integer,
//! a rational function with unit denominator becomes a polynomial), so
//! structural equality coincides with mathematical equality. Rational
//! functions are gcd-reduced with a primitive denominator whose leading
//! coefficient is positive.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::IntPoly;
use crate::error::{Error, Result};

/// A reduced ratio of two integer polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFn {
    num: IntPoly,
    den: IntPoly,
}

impl RatFn {
    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ExactScalar {
    Int(BigInt),
    Rat(BigRational),
    Poly(IntPoly),
    RatFn(RatFn),
}

use ExactScalar::*;

impl ExactScalar {
    pub fn zero() -> Self {
        Int(BigInt::zero())
    }

    pub fn one() -> Self {
        Int(BigInt::one())
    }

    pub fn from_int(n: i64) -> Self {
        Int(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Int(n)
    }

    pub fn from_rational(r: BigRational) -> Self {
        normalize_rat(r)
    }

    pub fn from_poly(p: IntPoly) -> Self {
        normalize_poly(p)
    }

    /// `num / den` as a normalized scalar; errors on a zero denominator.
    pub fn ratio(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize_ratfn(num, den))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Int(n) => n.is_zero(),
            Rat(r) => r.is_zero(),
            Poly(p) => p.is_zero(),
            RatFn(f) => f.num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int(n) if n.is_one())
    }

    /// The integer value, if this scalar is an integer.
    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Int(n) => Some(n),
            _ => None,
        }
    }

    /// The rational value, if this scalar is free of `t`.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Int(n) => Some(BigRational::from(n.clone())),
            Rat(r) => Some(r.clone()),
            _ => None,
        }
    }

    /// The polynomial value, if this scalar is a polynomial in `t`
    /// (integers lift to constants).
    pub fn to_poly(&self) -> Option<IntPoly> {
        match self {
            Int(n) => Some(IntPoly::constant(n.clone())),
            Poly(p) => Some(p.clone()),
            _ => None,
        }
    }

    pub fn add(&self, rhs: &ExactScalar) -> ExactScalar {
        match (self, rhs) {
            (Int(a), Int(b)) => Int(a + b),
            (Rat(_) | Int(_), Rat(_) | Int(_)) => normalize_rat(self.rat_value() + rhs.rat_value()),
            (Poly(_) | Int(_), Poly(_) | Int(_)) => {
                normalize_poly(&self.poly_value() + &rhs.poly_value())
            }
            _ => {
                let (an, ad) = self.ratfn_value();
                let (bn, bd) = rhs.ratfn_value();
                normalize_ratfn(&(&an * &bd) + &(&bn * &ad), &ad * &bd)
            }
        }
    }

    pub fn sub(&self, rhs: &ExactScalar) -> ExactScalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> ExactScalar {
        match self {
            Int(n) => Int(-n),
            Rat(r) => Rat(-r),
            Poly(p) => Poly(-p),
            RatFn(f) => RatFn(crate::algebra::scalar::RatFn {
                num: -&f.num,
                den: f.den.clone(),
            }),
        }
    }

    pub fn mul(&self, rhs: &ExactScalar) -> ExactScalar {
        match (self, rhs) {
            (Int(a), Int(b)) => Int(a * b),
            (Rat(_) | Int(_), Rat(_) | Int(_)) => normalize_rat(self.rat_value() * rhs.rat_value()),
            (Poly(_) | Int(_), Poly(_) | Int(_)) => {
                normalize_poly(&self.poly_value() * &rhs.poly_value())
            }
            _ => {
                let (an, ad) = self.ratfn_value();
                let (bn, bd) = rhs.ratfn_value();
                normalize_ratfn(&an * &bn, &ad * &bd)
            }
        }
    }

    pub fn div(&self, rhs: &ExactScalar) -> Result<ExactScalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self, rhs) {
            (Rat(_) | Int(_), Rat(_) | Int(_)) => {
                Ok(normalize_rat(self.rat_value() / rhs.rat_value()))
            }
            _ => {
                let (an, ad) = self.ratfn_value();
                let (bn, bd) = rhs.ratfn_value();
                Ok(normalize_ratfn(&an * &bd, &ad * &bn))
            }
        }
    }

    /// Evaluate at `t = q`; errors if `q` is a pole of a rational-function
    /// value.
    pub fn eval_t(&self, q: &BigRational) -> Result<ExactScalar> {
        match self {
            Int(_) | Rat(_) => Ok(self.clone()),
            Poly(p) => Ok(normalize_rat(p.eval(q))),
            RatFn(f) => {
                let den = f.den.eval(q);
                if den.is_zero() {
                    return Err(Error::Pole(format!("t = {q} annihilates {}", f.den)));
                }
                Ok(normalize_rat(f.num.eval(q) / den))
            }
        }
    }

    /// Substitute `t -> t^d`.
    pub fn substitute_power(&self, d: usize) -> ExactScalar {
        match self {
            Int(_) | Rat(_) => self.clone(),
            Poly(p) => Poly(p.substitute_power(d)),
            RatFn(f) => RatFn(crate::algebra::scalar::RatFn {
                num: f.num.substitute_power(d),
                den: f.den.substitute_power(d),
            }),
        }
    }

    fn rat_value(&self) -> BigRational {
        match self {
            Int(n) => BigRational::from(n.clone()),
            Rat(r) => r.clone(),
            _ => unreachable!("rat_value on a t-dependent scalar"),
        }
    }

    fn poly_value(&self) -> IntPoly {
        match self {
            Int(n) => IntPoly::constant(n.clone()),
            Poly(p) => p.clone(),
            _ => unreachable!("poly_value on a non-polynomial scalar"),
        }
    }

    /// View as a numerator/denominator pair of integer polynomials.
    fn ratfn_value(&self) -> (IntPoly, IntPoly) {
        match self {
            Int(n) => (IntPoly::constant(n.clone()), IntPoly::one()),
            Rat(r) => (
                IntPoly::constant(r.numer().clone()),
                IntPoly::constant(r.denom().clone()),
            ),
            Poly(p) => (p.clone(), IntPoly::one()),
            RatFn(f) => (f.num.clone(), f.den.clone()),
        }
    }

    /// Compact rendering used inside symmetric function displays.
    pub fn compact(&self) -> String {
        match self {
            Int(n) => n.to_string(),
            Rat(r) => r.to_string(),
            Poly(p) => p.compact(),
            RatFn(f) => format!("({})/({})", f.num.compact(), f.den.compact()),
        }
    }

    /// True when the compact rendering is a sum and needs parentheses
    /// before a `*`.
    pub fn needs_parens(&self) -> bool {
        let s = self.compact();
        s.chars().skip(1).any(|c| c == '+' || c == '-') || matches!(self, Rat(_) | RatFn(_))
    }
}

fn normalize_rat(r: BigRational) -> ExactScalar {
    if r.denom().is_one() {
        Int(r.numer().clone())
    } else {
        Rat(r)
    }
}

fn normalize_poly(p: IntPoly) -> ExactScalar {
    match p.degree() {
        None => Int(BigInt::zero()),
        Some(0) => Int(p.coeff(0)),
        _ => Poly(p),
    }
}

fn normalize_ratfn(num: IntPoly, den: IntPoly) -> ExactScalar {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return Int(BigInt::zero());
    }
    // Reduce the polynomial gcd of the primitive parts, then the integer
    // gcd of the contents.
    let g = num.gcd(&den);
    let (mut num, mut den) = if g.is_one() {
        (num, den)
    } else {
        (
            num.div_exact(&g).expect("gcd divides"),
            den.div_exact(&g).expect("gcd divides"),
        )
    };
    let c = num.content().gcd(&den.content());
    if !c.is_one() {
        num = num
            .div_exact(&IntPoly::constant(c.clone()))
            .expect("content divides");
        den = den
            .div_exact(&IntPoly::constant(c))
            .expect("content divides");
    }
    if den.leading_coeff().is_negative() {
        num = -&num;
        den = -&den;
    }
    if den.is_one() {
        normalize_poly(num)
    } else if den.degree() == Some(0) && num.degree() == Some(0) {
        normalize_rat(BigRational::new(num.coeff(0), den.coeff(0)))
    } else {
        RatFn(RatFn { num, den })
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int(n) => write!(f, "{n}"),
            Rat(r) => write!(f, "{r}"),
            Poly(p) => write!(f, "{p}"),
            RatFn(r) => write!(f, "({}) / ({})", r.num, r.den),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> ExactScalar {
        ExactScalar::from_poly(IntPoly::from_ints(c))
    }

    #[test]
    fn demotion_to_canonical_variants() {
        assert_eq!(
            ExactScalar::from_rational(BigRational::new(4.into(), 2.into())),
            ExactScalar::from_int(2)
        );
        assert_eq!(poly(&[5]), ExactScalar::from_int(5));
        assert_eq!(
            ExactScalar::ratio(IntPoly::from_ints(&[1, 1]), IntPoly::one()).unwrap(),
            poly(&[1, 1])
        );
        assert_eq!(
            ExactScalar::ratio(IntPoly::from_ints(&[2]), IntPoly::from_ints(&[4])).unwrap(),
            ExactScalar::from_rational(BigRational::new(1.into(), 2.into()))
        );
    }

    #[test]
    fn ratfn_reduction() {
        // (t^2 - 1) / (t + 1) = t - 1
        let r = ExactScalar::ratio(IntPoly::from_ints(&[-1, 0, 1]), IntPoly::from_ints(&[1, 1]))
            .unwrap();
        assert_eq!(r, poly(&[-1, 1]));
        // (2 + 2t) / 4 = (1 + t) / 2, kept as a reduced ratio
        let r = ExactScalar::ratio(IntPoly::from_ints(&[2, 2]), IntPoly::from_ints(&[4])).unwrap();
        match &r {
            ExactScalar::RatFn(f) => {
                assert_eq!(f.num(), &IntPoly::from_ints(&[1, 1]));
                assert_eq!(f.den(), &IntPoly::from_ints(&[2]));
            }
            other => panic!("expected a rational function, got {other}"),
        }
    }

    #[test]
    fn mixed_arithmetic() {
        let half = ExactScalar::from_rational(BigRational::new(1.into(), 2.into()));
        let t1 = poly(&[1, 1]);
        let prod = half.mul(&t1);
        // (1 + t) / 2
        let sum = prod.add(&prod);
        assert_eq!(sum, t1);
        assert_eq!(poly(&[0, 1]).mul(&poly(&[0, 1])), poly(&[0, 0, 1]));
    }

    #[test]
    fn division_round_trip_in_every_variant() {
        let values = [
            ExactScalar::from_int(6),
            ExactScalar::from_rational(BigRational::new(3.into(), 7.into())),
            poly(&[1, 2, 1]),
            ExactScalar::ratio(IntPoly::from_ints(&[1, 1]), IntPoly::from_ints(&[1, 0, 3]))
                .unwrap(),
        ];
        for a in &values {
            for b in &values {
                let q = a.div(b).unwrap();
                assert_eq!(q.mul(b), *a, "({a}) / ({b}) * ({b})");
            }
        }
        assert_eq!(
            ExactScalar::from_int(1).div(&ExactScalar::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn evaluation_and_poles() {
        let q = BigRational::from(BigInt::from(2));
        assert_eq!(
            poly(&[1, 1, 1]).eval_t(&q).unwrap(),
            ExactScalar::from_int(7)
        );
        let f = ExactScalar::ratio(IntPoly::one(), IntPoly::from_ints(&[-2, 1])).unwrap();
        assert!(f.eval_t(&q).is_err());
        assert_eq!(ExactScalar::zero().eval_t(&q).unwrap(), ExactScalar::zero());
    }

    #[test]
    fn power_substitution() {
        let s = poly(&[0, 1]).substitute_power(3);
        assert_eq!(s, poly(&[0, 0, 0, 1]));
        assert_eq!(
            ExactScalar::from_int(4).substitute_power(5),
            ExactScalar::from_int(4)
        );
    }
}
