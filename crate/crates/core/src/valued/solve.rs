//! Artin-Schreier equations over truncated Laurent series.

use num_rational::Ratio;

use super::series::{Exponent, LaurentSeries, Value};
use crate::error::{Error, Result};

fn precision_index(c: &LaurentSeries, precision: Option<Exponent>) -> Result<i64> {
    let ram = c.ramification() as i64;
    let requested = precision.map(|e| (e * ram).floor().to_integer());
    match (c.precision_index(), requested) {
        (Some(a), Some(b)) => Ok(a.min(b)),
        (Some(a), None) | (None, Some(a)) => Ok(a),
        (None, None) => {
            Err(Error::PrecisionExhausted(format!("a working precision is required to solve with exact input {c}")))
        }
    }
}

/// Solves `x^p - x = c` for `v(c) > 0` by the iteration `x <- x^p - c`.
///
/// Each step multiplies the valuation of the residual by p, since the new
/// residual is `(x_new - x_old)^p`. The result is known modulo `t^N`, where
/// `N` is the smaller of the precision of `c` and `precision`.
pub fn hensel_as_solve(c: &LaurentSeries, precision: Option<Exponent>) -> Result<LaurentSeries> {
    let p = c.p();
    if c.is_exact_zero() {
        return Ok(LaurentSeries::zero(p));
    }
    let n = precision_index(c, precision)?;
    if let Some((i, _)) = c.lowest_term() {
        if i <= 0 {
            return Err(Error::PreconditionValuation(format!("v({c}) = {} is not positive", c.valuation()?)));
        }
    }
    let c = c.truncate_index(n);
    let mut x = LaurentSeries::big_o(p, c.ramification(), n);
    loop {
        let next = x.frobenius().sub(&c).truncate_index(n);
        if next == x {
            return Ok(x);
        }
        x = next;
    }
}

/// An approximate root of `X^p - X - a` in a ramified extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsRoot {
    pub theta: LaurentSeries,
    /// `a - (theta^p - theta)`.
    pub residual: LaurentSeries,
    pub residual_valuation: Value,
}

/// Builds a root of `X^p - X - a` for `v(a) < 0` with `v(a)` prime to p,
/// allowing ramification up to `p^e` times that of `a`.
///
/// A negative term `c t^x` of the residual is removed by adding `c t^{x/p}`
/// to `theta`, which leaves `c t^{x/p}` behind; this repeats while the
/// exponent fits the ramification budget. The positive part of what remains
/// is then handled by [`hensel_as_solve`]. For `a = t^{-j}` the residual
/// valuation is `-j/p^e`: the exact root needs unbounded ramification.
pub fn as_root_extension(a: &LaurentSeries, e: u32, precision: Option<Exponent>) -> Result<AsRoot> {
    let p = a.p();
    let Some((lead, _)) = a.lowest_term() else {
        return Err(Error::PreconditionValuation(format!("{a} has no known leading term")));
    };
    if lead >= 0 {
        return Err(Error::PreconditionValuation(format!("v({a}) = {} is not negative", a.valuation()?)));
    }
    if lead % p as i64 == 0 {
        return Err(Error::DivisibleValue(format!("v({a}) = {} is divisible by {p}", a.valuation()?)));
    }
    if e == 0 {
        return Err(Error::PreconditionValuation("a ramification budget of at least one step is required".into()));
    }
    let ram = a.ramification() * p.pow(e);
    let mut b = a.lift(ram);
    let mut theta = LaurentSeries::zero(p).lift(ram);
    // peel the least negative-exponent term with index divisible by p
    loop {
        let next = b.index_terms().find(|&(i, _)| i < 0 && i % p as i64 == 0);
        let Some((i, c)) = next else { break };
        let s = LaurentSeries::monomial_index(p, ram, c, i / p as i64);
        theta = theta.add(&s);
        b = b.sub(&LaurentSeries::monomial_index(p, ram, c, i)).add(&s);
    }
    let (low, high) = b.split_at_index(1);
    if !high.support_is_empty() {
        let y = hensel_as_solve(&high, precision)?;
        theta = theta.add(&y);
        b = low.add(&high.sub(&y.frobenius().sub(&y)));
    }
    let residual_valuation = b.valuation_bound();
    Ok(AsRoot { theta, residual: b, residual_valuation })
}

/// Witnesses for `x = X_0^q - X_0 + sum_{i=1}^{q-1} t^i X_i^q + Y`, `q = p^k`,
/// with `v(Y) >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageDecomposition {
    pub xs: Vec<LaurentSeries>,
    pub y: LaurentSeries,
}

impl ImageDecomposition {
    /// Evaluates the right-hand side.
    pub fn reconstruct(&self, k: u32) -> LaurentSeries {
        let p = self.y.p();
        let q = p.pow(k) as u64;
        let mut acc = self.xs[0].pow(q).sub(&self.xs[0]).add(&self.y);
        for (i, xi) in self.xs.iter().enumerate().skip(1) {
            acc = acc.add(&xi.pow(q).shift_index(i as i64));
        }
        acc
    }
}

/// Greedy digit decomposition, from the most negative exponent upward:
/// write `-j = q Q + i` with `0 <= i < q`; a term with `i != 0` goes to
/// `X_i` as `c t^Q`; a term with `i = 0` goes to `X_0` and leaves the
/// correction `c t^Q` behind.
pub fn image_decompose(x: &LaurentSeries, k: u32) -> Result<ImageDecomposition> {
    let p = x.p();
    if x.ramification() != 1 {
        return Err(Error::Unsupported(format!("image decomposition needs ramification 1, got {}", x.ramification())));
    }
    if let Some(n) = x.precision_index() {
        if n < 0 {
            return Err(Error::PrecisionExhausted(format!("principal part of {x} is not fully known")));
        }
    }
    let q = p.pow(k) as i64;
    let mut terms: Vec<Vec<(i64, u32)>> = vec![Vec::new(); q as usize];
    let mut b = x.clone();
    while let Some((e, c)) = b.lowest_term().filter(|t| t.0 < 0) {
        let (big_q, i) = (e.div_euclid(q), e.rem_euclid(q));
        terms[i as usize].push((big_q, c));
        b = b.sub(&LaurentSeries::monomial_index(p, 1, c, e));
        if i == 0 {
            b = b.add(&LaurentSeries::monomial_index(p, 1, c, big_q));
        }
    }
    let xs = terms.into_iter().map(|t| LaurentSeries::from_terms(p, 1, t, None)).collect();
    Ok(ImageDecomposition { xs, y: b })
}

/// `v(a)/p` as an exact rational, for checks.
pub fn expected_root_valuation(a: &LaurentSeries) -> Option<Exponent> {
    a.valuation().ok()?.finite().map(|v| v / Ratio::from_integer(a.p() as i64))
}
