#![allow(clippy::needless_range_loop)]

//! Finite field contexts.
//!
//! A [`FieldCtx`] fixes `q = p^e` together with a degree-`e` irreducible
//! modulus over the prime field (the least one in the encoding order).
//! Elements are residue polynomials of degree below `e`, encoded as
//! integers in base `p` with the constant coefficient least significant;
//! arithmetic goes through precomputed tables, so everything downstream
//! works with plain `u16` indices.

use std::sync::Arc;

use crate::error::{Error, Result};

/// An element index in `0..q`.
pub type Fq = u16;

/// Largest supported field size; tables are quadratic in `q`.
pub const MAX_Q: u64 = 512;

pub struct FieldCtx {
    p: u64,
    e: u32,
    q: u64,
    /// Modulus coefficients over the prime field, ascending, monic of
    /// degree `e` (just `[0, 1]`-style `x` placeholder when `e = 1`).
    modulus: Vec<u64>,
    add: Vec<Fq>,
    mul: Vec<Fq>,
    neg: Vec<Fq>,
    inv: Vec<Fq>,
}

impl std::fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FieldCtx(q = {})", self.q)
    }
}

impl FieldCtx {
    /// Build the field with `q` elements; errors unless `q` is a prime
    /// power within the supported range.
    pub fn new(q: u64) -> Result<Arc<FieldCtx>> {
        let (p, e) = factor_prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::from_prime_power(p, e)
    }

    pub fn from_prime_power(p: u64, e: u32) -> Result<Arc<FieldCtx>> {
        if !is_prime(p) {
            return Err(Error::NotPrimePower(p.pow(e.max(1))));
        }
        if e == 0 {
            return Err(Error::NotPrimePower(1));
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= MAX_Q)
            .ok_or(Error::FieldTooLarge(p.saturating_pow(e)))?;

        let modulus = least_irreducible_modulus(p, e);
        let qs = q as usize;
        let mut add = vec![0 as Fq; qs * qs];
        let mut mul = vec![0 as Fq; qs * qs];
        let mut neg = vec![0 as Fq; qs];
        let mut inv = vec![0 as Fq; qs];

        for a in 0..qs {
            let pa = decode(a as u64, p, e);
            for b in 0..qs {
                let pb = decode(b as u64, p, e);
                let s = poly_add_modp(&pa, &pb, p);
                add[a * qs + b] = encode(&s, p) as Fq;
                let m = poly_mul_mod(&pa, &pb, &modulus, p);
                mul[a * qs + b] = encode(&m, p) as Fq;
            }
        }
        for a in 0..qs {
            let pa = decode(a as u64, p, e);
            let n: Vec<u64> = pa.iter().map(|&c| (p - c) % p).collect();
            neg[a] = encode(&n, p) as Fq;
        }
        // Inverses by scanning the multiplication table.
        for a in 1..qs {
            for b in 1..qs {
                if mul[a * qs + b] == 1 {
                    inv[a] = b as Fq;
                    break;
                }
            }
        }

        Ok(Arc::new(FieldCtx {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `a` must be nonzero.
    #[inline]
    pub fn inv(&self, a: Fq) -> Fq {
        debug_assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    /// The modulus as a string over the prime subfield, e.g. `x^2+1`.
    pub fn modulus_string(&self) -> String {
        if self.e == 1 {
            return "x".into();
        }
        let mut parts = Vec::new();
        for (k, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            let s = match (k, c) {
                (0, c) => c.to_string(),
                (_, 1) => var,
                (_, c) => format!("{c}*{var}"),
            };
            parts.push(s);
        }
        parts.join("+")
    }
}

/// `q = p^e` with `p` prime, if possible.
pub fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            return (rest == 1).then_some((p, e));
        }
        p += 1;
    }
    Some((q, 1))
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn decode(mut v: u64, p: u64, e: u32) -> Vec<u64> {
    let mut out = vec![0u64; e as usize];
    for slot in out.iter_mut() {
        *slot = v % p;
        v /= p;
    }
    out
}

fn encode(coeffs: &[u64], p: u64) -> u64 {
    let mut v = 0u64;
    for &c in coeffs.iter().rev() {
        v = v * p + c;
    }
    v
}

fn poly_add_modp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect()
}

fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let e = modulus.len() - 1;
    if e == 0 {
        return vec![];
    }
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ca * cb) % p;
        }
    }
    // Reduce by the monic modulus.
    for k in (e..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for (j, &mc) in modulus.iter().enumerate().take(e) {
            let sub = (c * mc) % p;
            prod[k - e + j] = (prod[k - e + j] + p * p - sub) % p;
        }
    }
    prod.truncate(e.max(1));
    if e == 1 {
        // Prime field: value is the constant coefficient.
        prod.truncate(1);
    }
    prod
}

/// The least monic irreducible of degree `e` over `F_p`, by ascending
/// integer encoding of the non-leading coefficients. Irreducibility by
/// the absence of proper monic factors of degree at most `e / 2`.
fn least_irreducible_modulus(p: u64, e: u32) -> Vec<u64> {
    if e == 1 {
        return vec![0, 1]; // x itself; unused in prime-field arithmetic
    }
    let e = e as usize;
    let count = p.pow(e as u32);
    for enc in 0..count {
        let mut f = decode(enc, p, e as u32);
        f.push(1);
        if poly_irreducible_modp(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist");
}

fn poly_irreducible_modp(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for enc in 0..count {
            let mut g = decode(enc, p, d as u32);
            g.push(1);
            if poly_divides_modp(&g, f, p) {
                return false;
            }
        }
    }
    true
}

fn poly_divides_modp(g: &[u64], f: &[u64], p: u64) -> bool {
    // g monic; compute f mod g and test zero.
    let dg = g.len() - 1;
    let mut rem: Vec<u64> = f.to_vec();
    while rem.len() > dg {
        let k = rem.len() - 1;
        let c = rem[k];
        if c != 0 {
            for (j, &gc) in g.iter().enumerate().take(dg) {
                let sub = (c * gc) % p;
                rem[k - dg + j] = (rem[k - dg + j] + p * p - sub) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_factorization() {
        assert_eq!(factor_prime_power(2), Some((2, 1)));
        assert_eq!(factor_prime_power(9), Some((3, 2)));
        assert_eq!(factor_prime_power(8), Some((2, 3)));
        assert_eq!(factor_prime_power(12), None);
        assert_eq!(factor_prime_power(1), None);
        assert_eq!(factor_prime_power(97), Some((97, 1)));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = FieldCtx::new(5).unwrap();
        assert_eq!(f5.add(3, 4), 2);
        assert_eq!(f5.mul(3, 4), 2);
        assert_eq!(f5.neg(2), 3);
        assert_eq!(f5.mul(2, f5.inv(2)), 1);
    }

    #[test]
    fn f4_has_the_right_structure() {
        let f4 = FieldCtx::new(4).unwrap();
        assert_eq!(f4.p(), 2);
        assert_eq!(f4.e(), 2);
        // x^2 + x + 1 is the only irreducible quadratic over F_2.
        assert_eq!(f4.modulus_string(), "x^2+x+1");
        // Every nonzero element is invertible, and x * x = x + 1.
        for a in 1..4 {
            assert_eq!(f4.mul(a, f4.inv(a)), 1);
        }
        assert_eq!(f4.mul(2, 2), 3);
        // Characteristic 2: a + a = 0.
        for a in 0..4 {
            assert_eq!(f4.add(a, a), 0);
        }
    }

    #[test]
    fn f9_modulus_is_least() {
        let f9 = FieldCtx::new(9).unwrap();
        assert_eq!(f9.modulus_string(), "x^2+1");
        for a in 1..9 {
            assert_eq!(f9.mul(a, f9.inv(a)), 1);
        }
    }

    #[test]
    fn field_axioms_spot_check() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = FieldCtx::new(q).unwrap();
            let qs = q as u16;
            for a in 0..qs {
                for b in 0..qs {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(a, f.neg(a)), 0);
                    for c in 0..qs {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity over F_{q}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn oversized_fields_are_rejected() {
        assert!(matches!(
            FieldCtx::new(1 << 20),
            Err(Error::FieldTooLarge(_))
        ));
        assert!(matches!(FieldCtx::new(6), Err(Error::NotPrimePower(6))));
    }
}
