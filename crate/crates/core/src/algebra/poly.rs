//! Univariate polynomials in `t` with arbitrary-precision integer
//! coefficients.
//!
//! Coefficients are stored in ascending order of the power of `t` with
//! trailing zeros normalized away; the zero polynomial has an empty
//! coefficient vector and its degree is `None` rather than a sentinel
//! integer.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::Partition;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn t() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn mul_bigint(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute `t -> t^d`.
    pub fn substitute_power(&self, d: usize) -> IntPoly {
        assert!(d >= 1, "power substitution requires d >= 1");
        if self.is_zero() || d == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * d] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// Coefficient sequence read backwards (over 0..=degree).
    pub fn reversed(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.reversed()
    }

    /// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division, if `self = q * other` over the integers.
    pub fn div_exact(&self, other: &IntPoly) -> Option<IntPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dn = self.degree()?;
        let dd = other.degree()?;
        if dn < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); dn - dd + 1];
        let lead = other.leading_coeff();
        for k in (0..=dn - dd).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, oc) in other.coeffs.iter().enumerate() {
                let prod = oc * &q;
                rem[k + j] -= prod;
            }
            quo[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quo))
    }

    /// Scaled remainder of `self` by `b`: repeatedly multiplies by `lc(b)`
    /// and cancels the top term, so the result is `lc(b)^k * self mod b`
    /// for some `k`. Adequate for the primitive remainder sequence.
    fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("nonzero divisor");
        let lead = b.leading_coeff();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            let c = rem.leading_coeff();
            let mut coeffs: Vec<BigInt> = rem.coeffs.iter().map(|a| a * &lead).collect();
            for (j, bc) in b.coeffs.iter().enumerate() {
                let prod = bc * &c;
                coeffs[dr - db + j] -= prod;
            }
            rem = IntPoly::from_coeffs(coeffs);
        }
        rem
    }

    /// Gcd in `Z[t]` with positive leading coefficient, computed as the
    /// gcd of contents times the primitive pseudo-remainder sequence gcd.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return make_positive(other.clone());
        }
        if other.is_zero() {
            return make_positive(self.clone());
        }
        let content = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
            }
        }
        make_positive(a.mul_bigint(&content))
    }
}

fn make_positive(p: IntPoly) -> IntPoly {
    if p.leading_coeff().is_negative() {
        -&p
    } else {
        p
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    /// Spaced form with explicit `*`, e.g. `1 + 2*t + t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(" + ", " - ", "*"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl IntPoly {
    /// Compact form without spaces or `*`, e.g. `1+2t+t^3`.
    pub fn compact(&self) -> String {
        self.render("+", "-", "")
    }

    fn render(&self, plus: &str, minus: &str, times: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(minus);
            } else {
                out.push_str(plus);
            }
            let need_coeff = k == 0 || !mag.is_one();
            if need_coeff {
                out.push_str(&mag.to_string());
            }
            if k > 0 {
                if need_coeff {
                    out.push_str(times);
                }
                out.push('t');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

/// The t-analog `[m]_t = 1 + t + ... + t^{m-1}`. Rejects `m = 0`.
pub fn q_int(m: usize) -> Result<IntPoly> {
    if m == 0 {
        return Err(Error::InvalidInput("q_int requires m >= 1".into()));
    }
    Ok(IntPoly {
        coeffs: vec![BigInt::one(); m],
    })
}

/// The t-factorial `[m]_t! = [1]_t [2]_t ... [m]_t`, with `[0]_t! = 1`.
pub fn q_factorial(m: usize) -> IntPoly {
    let mut acc = IntPoly::one();
    for j in 1..=m {
        acc = &acc * &q_int(j).expect("j >= 1");
    }
    acc
}

/// `[λ]_t! = prod_j [λ_j]_t!`.
pub fn q_factorial_partition(lambda: &Partition) -> IntPoly {
    let mut acc = IntPoly::one();
    for &p in lambda.parts() {
        acc = &acc * &q_factorial(p as usize);
    }
    acc
}

/// Numeric `[m]_q` at an exact rational point; `[0]_q = 0`.
pub fn q_int_at(m: usize, q: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut pow = BigRational::one();
    for _ in 0..m {
        acc += &pow;
        pow *= q;
    }
    acc
}

/// Numeric `[m]_q!`.
pub fn q_factorial_at(m: usize, q: &BigRational) -> BigRational {
    let mut acc = BigRational::one();
    for j in 1..=m {
        acc *= q_int_at(j, q);
    }
    acc
}

/// Numeric `[λ]_q!`.
pub fn q_factorial_partition_at(lambda: &Partition, q: &BigRational) -> BigRational {
    let mut acc = BigRational::one();
    for &p in lambda.parts() {
        acc *= q_factorial_at(p as usize, q);
    }
    acc
}
