//! Dense univariate polynomials over a prime field F_p.
//!
//! These back the extension-field kernel (elements are residues modulo the
//! defining polynomial) and the rational function kernel F_p(t).

use std::cmp::Ordering;
use std::fmt;

use super::fp;
use crate::degree::Degree;

/// A polynomial over F_p; coefficients are stored lowest degree first with
/// trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FpPoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl FpPoly {
    pub fn new(p: u32, mut coeffs: Vec<u32>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        let mut poly = FpPoly { p, coeffs };
        poly.trim();
        poly
    }

    pub fn from_signed(p: u32, coeffs: &[i64]) -> Self {
        FpPoly::new(p, coeffs.iter().map(|&c| fp::reduce(c, p)).collect())
    }

    pub fn zero(p: u32) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        FpPoly::constant(p, 1)
    }

    pub fn constant(p: u32, c: u32) -> Self {
        FpPoly::new(p, vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(p: u32, c: u32, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        FpPoly::new(p, coeffs)
    }

    pub fn x(p: u32) -> Self {
        FpPoly::monomial(p, 1, 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u32 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Degree {
        Degree::of_len(self.coeffs.len())
    }

    /// Degree as an integer; the zero polynomial reports 0.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(fp::inv(self.leading(), self.p))
    }

    pub fn scale(&self, c: u32) -> FpPoly {
        let p = self.p;
        FpPoly::new(p, self.coeffs.iter().map(|&a| fp::mul(a, c, p)).collect())
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| fp::add(self.coeff(k), other.coeff(k), p)).collect();
        FpPoly::new(p, coeffs)
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| fp::sub(self.coeff(k), other.coeff(k), p)).collect();
        FpPoly::new(p, coeffs)
    }

    pub fn neg(&self) -> FpPoly {
        let p = self.p;
        FpPoly { p, coeffs: self.coeffs.iter().map(|&a| fp::neg(a, p)).collect() }
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p as u64;
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] += a as u64 * b as u64;
            }
        }
        FpPoly::new(self.p, acc.into_iter().map(|c| (c % p) as u32).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        FpPoly { p: self.p, coeffs }
    }

    pub fn pow(&self, mut e: u64) -> FpPoly {
        let mut base = self.clone();
        let mut acc = FpPoly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn divrem(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let p = self.p;
        if self.coeffs.len() < divisor.coeffs.len() {
            return (FpPoly::zero(p), self.clone());
        }
        let dlen = divisor.coeffs.len();
        let lead_inv = fp::inv(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dlen - 1];
            if c == 0 {
                continue;
            }
            let q = fp::mul(c, lead_inv, p);
            quot[k] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = fp::sub(rem[k + j], fp::mul(q, d, p), p);
            }
        }
        rem.truncate(dlen - 1);
        (FpPoly::new(p, quot), FpPoly::new(p, rem))
    }

    pub fn rem(&self, divisor: &FpPoly) -> FpPoly {
        self.divrem(divisor).1
    }

    pub fn divides(&self, other: &FpPoly) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (FpPoly::one(p), FpPoly::zero(p));
        let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let c = fp::inv(r0.leading(), p);
        (r0.scale(c), s0.scale(c), t0.scale(c))
    }

    /// Inverse modulo `modulus`, if `self` is a unit there.
    pub fn inv_mod(&self, modulus: &FpPoly) -> Option<FpPoly> {
        let (g, s, _) = self.rem(modulus).ext_gcd(modulus);
        if g.is_one() {
            Some(s.rem(modulus))
        } else {
            None
        }
    }

    pub fn eval(&self, x: u32) -> u32 {
        let p = self.p;
        self.coeffs.iter().rev().fold(0, |acc, &c| fp::add(fp::mul(acc, x, p), c, p))
    }

    /// `f(t)^p = sum c_i t^{ip}`, since coefficients in F_p are fixed by Frobenius.
    pub fn frobenius(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let p = self.p as usize;
        let mut coeffs = vec![0; (self.coeffs.len() - 1) * p + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * p] = c;
        }
        FpPoly { p: self.p, coeffs }
    }

    /// The p-th root in F_p[t], present iff every exponent is divisible by p.
    pub fn pth_root(&self) -> Option<FpPoly> {
        let p = self.p as usize;
        if self.coeffs.iter().enumerate().any(|(i, &c)| c != 0 && i % p != 0) {
            return None;
        }
        Some(FpPoly { p: self.p, coeffs: self.coeffs.iter().step_by(p).copied().collect() })
    }

    /// Irreducibility by trial division against every monic polynomial of
    /// degree at most half the degree. Constants are not irreducible.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            Degree::Finite(n) if n >= 1 => n,
            _ => return false,
        };
        for d in 1..=n / 2 {
            for cand in monic_polys(self.p, d) {
                if cand.divides(self) {
                    return false;
                }
            }
        }
        true
    }

    /// Integer encoding `sum c_i p^i`, used for deterministic ordering.
    pub fn index(&self) -> u128 {
        self.coeffs.iter().rev().fold(0u128, |acc, &c| acc * self.p as u128 + c as u128)
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            parts.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
            });
        }
        parts.join("+")
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

/// All monic polynomials of degree exactly `d` over F_p, in ascending order
/// of their lower-coefficient encoding.
pub fn monic_polys(p: u32, d: usize) -> impl Iterator<Item = FpPoly> {
    let count = (p as u128).pow(d as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push((idx % p as u128) as u32);
            idx /= p as u128;
        }
        coeffs.push(1);
        FpPoly { p, coeffs }
    })
}

/// The lexicographically least monic irreducible polynomial of degree `d`.
pub fn least_irreducible(p: u32, d: usize) -> FpPoly {
    monic_polys(p, d).find(|f| f.is_irreducible()).expect("irreducible polynomials exist in every degree")
}

impl Ord for FpPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.p
            .cmp(&other.p)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u32, c: &[u32]) -> FpPoly {
        FpPoly::new(p, c.to_vec())
    }

    #[test]
    fn divrem_reconstructs() {
        let a = poly(3, &[1, 2, 0, 1, 2]);
        let b = poly(3, &[2, 1, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_and_bezout() {
        // (t+1)(t^2+t+1) and (t+1)t over F_2
        let a = poly(2, &[1, 1]).mul(&poly(2, &[1, 1, 1]));
        let b = poly(2, &[0, 1, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, poly(2, &[1, 1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn irreducibles_over_f2() {
        let deg2: Vec<FpPoly> = monic_polys(2, 2).filter(|f| f.is_irreducible()).collect();
        assert_eq!(deg2, vec![poly(2, &[1, 1, 1])]);
        assert_eq!(least_irreducible(2, 4), poly(2, &[1, 1, 0, 0, 1]));
        assert_eq!(least_irreducible(3, 2), poly(3, &[1, 0, 1]));
        assert_eq!(least_irreducible(3, 3), poly(3, &[1, 2, 0, 1]));
    }

    #[test]
    fn frobenius_and_root() {
        let f = poly(3, &[2, 1, 1]);
        assert_eq!(f.frobenius(), f.pow(3));
        assert_eq!(f.frobenius().pth_root(), Some(f));
        assert_eq!(poly(2, &[0, 1]).pth_root(), None);
    }

    #[test]
    fn display() {
        assert_eq!(poly(3, &[1, 0, 2]).to_string(), "2*t^2+1");
        assert_eq!(poly(2, &[0, 1, 1]).fmt_var("x"), "x^2+x");
    }
}
