//! Truncated formal Laurent series over F_p with exponents in `(1/m)Z`.
//!
//! Exponents are stored as integer indices in units of `1/m`, where the
//! ramification `m` is a power of p. A series either is exact (finite
//! support, no error term) or carries an absolute precision `N`, meaning the
//! value is only asserted modulo `t^N`.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::fields::fp;

pub type Exponent = Ratio<i64>;

/// A valuation: a rational with denominator dividing the ramification, or
/// infinity for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Finite(Exponent),
    Infinity,
}

impl Value {
    pub fn int(v: i64) -> Self {
        Value::Finite(Ratio::from_integer(v))
    }

    pub fn finite(self) -> Option<Exponent> {
        match self {
            Value::Finite(v) => Some(v),
            Value::Infinity => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(v) => write!(f, "{v}"),
            Value::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentSeries {
    p: u32,
    ram: u32,
    /// Index of `coeffs[0]`.
    start: i64,
    /// `coeffs[0]` and the last entry are nonzero, or the vector is empty.
    coeffs: Vec<u32>,
    /// Absolute precision in index units; `None` for exact values.
    prec: Option<i64>,
}

fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Smallest power of p that is a multiple of `d`, if `d` is a power of p.
fn ram_for_denominator(p: u32, d: i64) -> Option<u32> {
    let mut m: i64 = 1;
    while m < d {
        m *= p as i64;
    }
    (m == d).then_some(m as u32)
}

impl LaurentSeries {
    fn from_dense(p: u32, ram: u32, start: i64, mut coeffs: Vec<u32>, prec: Option<i64>) -> Self {
        if let Some(n) = prec {
            let keep = n.saturating_sub(start).clamp(0, coeffs.len() as i64) as usize;
            coeffs.truncate(keep);
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().position(|&c| c != 0).unwrap_or(coeffs.len());
        let (start, coeffs) =
            if lead == coeffs.len() { (0, Vec::new()) } else { (start + lead as i64, coeffs.split_off(lead)) };
        LaurentSeries { p, ram, start, coeffs, prec }
    }

    pub fn zero(p: u32) -> Self {
        LaurentSeries { p, ram: 1, start: 0, coeffs: Vec::new(), prec: None }
    }

    pub fn one(p: u32) -> Self {
        Self::monomial_index(p, 1, 1, 0)
    }

    /// The uniformizer `t`.
    pub fn t(p: u32) -> Self {
        Self::monomial_index(p, 1, 1, 1)
    }

    /// `c * t^(index/ram)`, exact.
    pub fn monomial_index(p: u32, ram: u32, c: u32, index: i64) -> Self {
        Self::from_dense(p, ram, index, vec![c % p], None)
    }

    /// `c * t^e`, exact; the ramification is the denominator of `e`, which
    /// must be a power of p.
    pub fn monomial(p: u32, c: u32, e: Exponent) -> Result<Self> {
        let ram = ram_for_denominator(p, *e.denom())
            .ok_or_else(|| Error::Unsupported(format!("exponent {e} has a denominator prime to p")))?;
        Ok(Self::monomial_index(p, ram, c, *e.numer()))
    }

    /// Sums the given `(index, coefficient)` terms.
    pub fn from_terms(p: u32, ram: u32, terms: impl IntoIterator<Item = (i64, u32)>, prec: Option<i64>) -> Self {
        let terms: Vec<(i64, u32)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::from_dense(p, ram, 0, Vec::new(), prec);
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0u32; (hi - lo + 1) as usize];
        for (i, c) in terms {
            let slot = &mut coeffs[(i - lo) as usize];
            *slot = fp::add(*slot, c % p, p);
        }
        Self::from_dense(p, ram, lo, coeffs, prec)
    }

    /// The zero series known only modulo `t^(index/ram)`.
    pub fn big_o(p: u32, ram: u32, index: i64) -> Self {
        Self::from_dense(p, ram, 0, Vec::new(), Some(index))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn ramification(&self) -> u32 {
        self.ram
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    pub fn precision_index(&self) -> Option<i64> {
        self.prec
    }

    pub fn precision(&self) -> Option<Exponent> {
        self.prec.map(|n| Ratio::new(n, self.ram as i64))
    }

    /// True when no nonzero coefficient is known.
    pub fn support_is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.prec.is_none()
    }

    /// Nonzero terms as `(index, coefficient)` in increasing index order.
    pub fn index_terms(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(move |(k, &c)| (self.start + k as i64, c))
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, u32)> + '_ {
        let m = self.ram as i64;
        self.index_terms().map(move |(i, c)| (Ratio::new(i, m), c))
    }

    pub fn coeff_at_index(&self, index: i64) -> u32 {
        if index < self.start {
            return 0;
        }
        self.coeffs.get((index - self.start) as usize).copied().unwrap_or(0)
    }

    /// Lowest known term `(index, coefficient)`.
    pub fn lowest_term(&self) -> Option<(i64, u32)> {
        self.coeffs.first().map(|&c| (self.start, c))
    }

    /// Least supported exponent; infinity for an exact zero.
    pub fn valuation(&self) -> Result<Value> {
        match (self.lowest_term(), self.prec) {
            (Some((i, _)), _) => Ok(Value::Finite(Ratio::new(i, self.ram as i64))),
            (None, None) => Ok(Value::Infinity),
            (None, Some(n)) => Err(Error::BelowPrecision(format_exponent(n, self.ram))),
        }
    }

    /// The valuation when known, otherwise the precision (a lower bound).
    pub fn valuation_bound(&self) -> Value {
        match (self.lowest_term(), self.prec) {
            (Some((i, _)), _) => Value::Finite(Ratio::new(i, self.ram as i64)),
            (None, Some(n)) => Value::Finite(Ratio::new(n, self.ram as i64)),
            (None, None) => Value::Infinity,
        }
    }

    fn index_bound(&self) -> Option<i64> {
        self.lowest_term().map(|t| t.0).or(self.prec)
    }

    /// Re-expresses the series at ramification `ram`, a multiple of the current one.
    pub fn lift(&self, ram: u32) -> LaurentSeries {
        if ram == self.ram {
            return self.clone();
        }
        assert!(ram.is_multiple_of(self.ram), "ramification {ram} is not a multiple of {}", self.ram);
        let k = (ram / self.ram) as i64;
        LaurentSeries::from_terms(self.p, ram, self.index_terms().map(|(i, c)| (i * k, c)), self.prec.map(|n| n * k))
    }

    /// Drops every term at index `>= index` and records the new precision.
    pub fn truncate_index(&self, index: i64) -> LaurentSeries {
        let prec = min_prec(self.prec, Some(index));
        Self::from_dense(self.p, self.ram, self.start, self.coeffs.clone(), prec)
    }

    /// Truncates at the exponent `e` (rounded down to the index grid).
    pub fn truncate(&self, e: Exponent) -> LaurentSeries {
        let idx = (e * self.ram as i64).floor().to_integer();
        self.truncate_index(idx)
    }

    /// Forgets the error term; used when a finite truncation is to be
    /// treated as an exact Laurent polynomial.
    pub fn to_exact(&self) -> LaurentSeries {
        LaurentSeries { prec: None, ..self.clone() }
    }

    fn aligned(&self, other: &LaurentSeries) -> (LaurentSeries, LaurentSeries) {
        assert_eq!(self.p, other.p, "series over different characteristics");
        let ram = self.ram.max(other.ram);
        (self.lift(ram), other.lift(ram))
    }

    pub fn add(&self, other: &LaurentSeries) -> LaurentSeries {
        let (a, b) = self.aligned(other);
        let p = a.p;
        let prec = min_prec(a.prec, b.prec);
        if b.coeffs.is_empty() {
            return Self::from_dense(p, a.ram, a.start, a.coeffs, prec);
        }
        if a.coeffs.is_empty() {
            return Self::from_dense(p, b.ram, b.start, b.coeffs, prec);
        }
        let lo = a.start.min(b.start);
        let hi = (a.start + a.coeffs.len() as i64).max(b.start + b.coeffs.len() as i64);
        let mut coeffs = vec![0u32; (hi - lo) as usize];
        for (k, &c) in a.coeffs.iter().enumerate() {
            coeffs[(a.start - lo) as usize + k] = c;
        }
        for (k, &c) in b.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(b.start - lo) as usize + k];
            *slot = fp::add(*slot, c, p);
        }
        Self::from_dense(p, a.ram, lo, coeffs, prec)
    }

    pub fn neg(&self) -> LaurentSeries {
        let p = self.p;
        LaurentSeries { coeffs: self.coeffs.iter().map(|&c| fp::neg(c, p)).collect(), ..self.clone() }
    }

    pub fn sub(&self, other: &LaurentSeries) -> LaurentSeries {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u32) -> LaurentSeries {
        let p = self.p;
        Self::from_dense(
            p,
            self.ram,
            self.start,
            self.coeffs.iter().map(|&a| fp::mul(a, c % p, p)).collect(),
            self.prec,
        )
    }

    /// Multiplies by `t^(index/ram)`.
    pub fn shift_index(&self, index: i64) -> LaurentSeries {
        LaurentSeries {
            start: if self.coeffs.is_empty() { 0 } else { self.start + index },
            prec: self.prec.map(|n| n + index),
            ..self.clone()
        }
    }

    /// Product; the precision is `min(N_x + v(y), N_y + v(x))`.
    pub fn mul(&self, other: &LaurentSeries) -> LaurentSeries {
        let (a, b) = self.aligned(other);
        let p = a.p;
        if a.is_exact_zero() || b.is_exact_zero() {
            return LaurentSeries { ram: a.ram, ..LaurentSeries::zero(p) };
        }
        let prec = min_prec(a.prec.map(|n| n + b.index_bound().unwrap()), b.prec.map(|n| n + a.index_bound().unwrap()));
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return Self::from_dense(p, a.ram, 0, Vec::new(), prec);
        }
        let mut acc = vec![0u64; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                acc[i + j] += x as u64 * y as u64;
            }
        }
        let coeffs = acc.into_iter().map(|c| (c % p as u64) as u32).collect();
        Self::from_dense(p, a.ram, a.start + b.start, coeffs, prec)
    }

    pub fn pow(&self, mut e: u64) -> LaurentSeries {
        let mut acc = LaurentSeries { ram: self.ram, ..LaurentSeries::one(self.p) };
        let mut base = self.clone();
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

    /// Multiplicative inverse. A truncated input `t^v(c + ...) + O(t^N)` has
    /// an inverse known to precision `N - 2v`; `cap` bounds the result
    /// further and is required for exact non-monomial inputs.
    pub fn inv_to(&self, cap: Option<Exponent>) -> Result<LaurentSeries> {
        let p = self.p;
        let cap = cap.map(|e| (e * self.ram as i64).floor().to_integer());
        let Some((v, c)) = self.lowest_term() else {
            return if self.prec.is_none() {
                Err(Error::DivisionByZero)
            } else {
                Err(Error::PrecisionExhausted(format!("cannot invert {self}: leading term unknown")))
            };
        };
        let c_inv = fp::inv(c, p);
        if self.prec.is_none() && self.coeffs.len() == 1 {
            return Ok(LaurentSeries::monomial_index(p, self.ram, c_inv, -v));
        }
        let prec = min_prec(self.prec.map(|n| n - 2 * v), cap).ok_or_else(|| {
            Error::PrecisionExhausted(format!("inverse of {self} is infinite; a precision cap is required"))
        })?;
        let rel = prec + v;
        let len = rel.max(0) as usize;
        let u: Vec<u32> = self.coeffs.iter().map(|&a| fp::mul(a, c_inv, p)).collect();
        let mut b = vec![0u32; len];
        if len > 0 {
            b[0] = 1;
        }
        for k in 1..len {
            let mut s = 0u64;
            for j in 1..=k.min(u.len() - 1) {
                s += u[j] as u64 * b[k - j] as u64;
            }
            b[k] = fp::neg((s % p as u64) as u32, p);
        }
        let coeffs = b.into_iter().map(|x| fp::mul(x, c_inv, p)).collect();
        Ok(Self::from_dense(p, self.ram, -v, coeffs, Some(prec)))
    }

    /// Quotient, with the result precision bounded by `cap` when given.
    pub fn div_to(&self, other: &LaurentSeries, cap: Option<Exponent>) -> Result<LaurentSeries> {
        let inv_cap = match (cap, self.valuation_bound()) {
            (Some(c), Value::Finite(v)) => Some(c - v),
            _ => None,
        };
        Ok(self.mul(&other.inv_to(inv_cap)?))
    }

    /// `x^p`: exponents (and the precision) scale by p. Exact, since
    /// `(a + e)^p = a^p + e^p` and coefficients in F_p are fixed.
    pub fn frobenius(&self) -> LaurentSeries {
        let p = self.p as i64;
        LaurentSeries::from_terms(
            self.p,
            self.ram,
            self.index_terms().map(|(i, c)| (i * p, c)),
            self.prec.map(|n| n * p),
        )
    }

    /// p-th root, present iff every supported index is divisible by p at the
    /// current ramification. The precision rounds down to the index grid.
    pub fn pth_root(&self) -> Option<LaurentSeries> {
        let p = self.p as i64;
        if self.index_terms().any(|(i, _)| i % p != 0) {
            return None;
        }
        Some(LaurentSeries::from_terms(
            self.p,
            self.ram,
            self.index_terms().map(|(i, c)| (i / p, c)),
            self.prec.map(|n| n.div_euclid(p)),
        ))
    }

    /// Terms with index below `index` (exact) and the rest (keeping the precision).
    pub fn split_at_index(&self, index: i64) -> (LaurentSeries, LaurentSeries) {
        let low = LaurentSeries::from_terms(self.p, self.ram, self.index_terms().filter(|t| t.0 < index), None);
        let high = LaurentSeries::from_terms(self.p, self.ram, self.index_terms().filter(|t| t.0 >= index), self.prec);
        (low, high)
    }
}

pub(crate) fn format_exponent(index: i64, ram: u32) -> String {
    let e = Ratio::new(index, ram as i64);
    if e.is_integer() {
        format!("{}", e.to_integer())
    } else {
        format!("({}/{})", e.numer(), e.denom())
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .index_terms()
            .map(|(i, c)| {
                let mono = if i == 0 {
                    String::new()
                } else if i == self.ram as i64 {
                    "t".to_string()
                } else {
                    format!("t^{}", format_exponent(i, self.ram))
                };
                match (c, mono.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => mono,
                    (_, false) => format!("{c}*{mono}"),
                }
            })
            .collect();
        if let Some(n) = self.prec {
            parts.push(format!("O(t^{})", format_exponent(n, self.ram)));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}
