//! Maximal values `v f(a)` of p-polynomials over F_p((t)) on a window of
//! exponents.
//!
//! A candidate argument is a tuple of series `a_j = sum_{e=lo}^{hi} d_{j,e} t^e`
//! with digits `d_{j,e}` in F_p. Since `f` is F_p-affine in the digits, the
//! set of values `f(a)` is an affine F_p-space, which the greedy mode
//! reduces by echelon elimination; brute force enumerates every tuple.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;

use super::series::{LaurentSeries, Value};
use crate::error::{Error, Result};
use crate::fields::fp;

/// `f(X_0, ..., X_{n-1}) = sum_j sum_i c_{j,i} X_j^{p^i} + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPPolynomial {
    p: u32,
    /// `coeffs[j][i]` multiplies `X_j^{p^i}`.
    coeffs: Vec<Vec<LaurentSeries>>,
    constant: LaurentSeries,
}

impl SeriesPPolynomial {
    pub fn new(mut coeffs: Vec<Vec<LaurentSeries>>, constant: LaurentSeries) -> Result<Self> {
        for c in &mut coeffs {
            while c.last().is_some_and(|x| x.is_exact_zero()) {
                c.pop();
            }
        }
        let p = constant.p();
        if coeffs.iter().flatten().any(|c| c.p() != p) {
            return Err(Error::DescriptorMismatch {
                left: format!("laurent:{p}"),
                right: "series of another characteristic".into(),
            });
        }
        Ok(SeriesPPolynomial { p, coeffs, constant })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn variables(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Vec<LaurentSeries>] {
        &self.coeffs
    }

    pub fn constant(&self) -> &LaurentSeries {
        &self.constant
    }

    fn additive_part(&self, j: usize, a: &LaurentSeries) -> LaurentSeries {
        let mut acc = LaurentSeries::zero(self.p);
        let mut power = a.clone();
        for (i, c) in self.coeffs[j].iter().enumerate() {
            if i > 0 {
                power = power.frobenius();
            }
            if !c.is_exact_zero() {
                acc = acc.add(&c.mul(&power));
            }
        }
        acc
    }

    pub fn eval(&self, args: &[LaurentSeries]) -> Result<LaurentSeries> {
        if args.len() != self.coeffs.len() {
            return Err(Error::Unsupported(format!("expected {} arguments, got {}", self.coeffs.len(), args.len())));
        }
        let mut acc = self.constant.clone();
        for (j, a) in args.iter().enumerate() {
            acc = acc.add(&self.additive_part(j, a));
        }
        Ok(acc)
    }

    /// `min_j 2 v(c_{j,0})` over variables with a nonzero linear coefficient:
    /// a value above it lifts to an exact zero by Hensel's lemma in that
    /// variable, since the derivative in `X_j` is the constant `c_{j,0}`.
    pub fn hensel_threshold(&self) -> Option<Value> {
        self.coeffs
            .iter()
            .filter_map(|cs| cs.first())
            .filter_map(|c| c.valuation().ok().and_then(|v| v.finite()))
            .map(|v| Value::Finite(v * 2))
            .min()
    }

    fn certify(&self, value: &LaurentSeries) -> Value {
        if value.is_exact_zero() {
            return Value::Infinity;
        }
        let v = value.valuation_bound();
        match self.hensel_threshold() {
            Some(h) if v > h => Value::Infinity,
            _ => v,
        }
    }
}

impl fmt::Display for SeriesPPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, cs) in self.coeffs.iter().enumerate() {
            for (i, c) in cs.iter().enumerate() {
                if c.is_exact_zero() {
                    continue;
                }
                let var = if self.coeffs.len() == 1 { "X".to_string() } else { format!("X{j}") };
                let e = (self.p as u64).pow(i as u32);
                let mono = if e == 1 { var } else { format!("{var}^{e}") };
                if c.to_string() == "1" {
                    parts.push(mono);
                } else {
                    parts.push(format!("({c})*{mono}"));
                }
            }
        }
        if !self.constant.is_exact_zero() || parts.is_empty() {
            parts.push(format!("({})", self.constant));
        }
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Unsupported(format!("empty window [{lo}..{hi}]")));
        }
        Ok(Window { lo, hi })
    }

    pub fn width(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    BruteForce,
    Greedy,
}

/// Default cap on the number of tuples brute force may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    pub value: Value,
    pub witness: Vec<LaurentSeries>,
    /// `v f(witness)` before Hensel certification.
    pub attained: Value,
    /// True when the value is known to be the maximum over the whole field.
    pub global: bool,
}

impl ExtremalResult {
    pub fn label(&self) -> &'static str {
        if self.global {
            "global max"
        } else {
            "window max"
        }
    }
}

fn digits_to_series(p: u32, window: Window, digits: &[u32]) -> LaurentSeries {
    LaurentSeries::from_terms(p, 1, digits.iter().enumerate().map(|(k, &d)| (window.lo + k as i64, d)), None)
}

fn split_witness(p: u32, n: usize, window: Window, digits: &[u32]) -> Vec<LaurentSeries> {
    let w = window.width();
    (0..n).map(|j| digits_to_series(p, window, &digits[j * w..(j + 1) * w])).collect()
}

pub fn extremal_search(
    f: &SeriesPPolynomial,
    window: Window,
    mode: SearchMode,
    budget: u128,
) -> Result<ExtremalResult> {
    let mut result = match mode {
        SearchMode::BruteForce => brute_force(f, window, budget)?,
        SearchMode::Greedy => greedy(f, window)?,
    };
    result.global = result.value == Value::Infinity || certify_global(f, result.value);
    Ok(result)
}

fn brute_force(f: &SeriesPPolynomial, window: Window, budget: u128) -> Result<ExtremalResult> {
    let p = f.p;
    let n = f.variables();
    let slots = n * window.width();
    let required = (p as u128).checked_pow(slots as u32).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    // monomial images A_j(d t^e), so each tuple costs additions only
    let images: Vec<Vec<Vec<LaurentSeries>>> = (0..n)
        .map(|j| {
            (window.lo..=window.hi)
                .map(|e| (0..p).map(|d| f.additive_part(j, &LaurentSeries::monomial_index(p, 1, d, e))).collect())
                .collect()
        })
        .collect();
    let mut digits = vec![0u32; slots];
    // ranked by the raw valuation; certification is monotone in it
    let mut best: Option<(Value, LaurentSeries, Vec<u32>)> = None;
    loop {
        let mut value = f.constant.clone();
        for (s, &d) in digits.iter().enumerate() {
            if d != 0 {
                let (j, k) = (s / window.width(), s % window.width());
                value = value.add(&images[j][k][d as usize]);
            }
        }
        let raw = value.valuation_bound();
        if best.as_ref().is_none_or(|b| raw > b.0) {
            best = Some((raw, value, digits.clone()));
        }
        // lexicographic successor, first digit most significant
        let mut s = slots;
        loop {
            if s == 0 {
                let (attained, value, digits) = best.unwrap();
                let witness = split_witness(p, n, window, &digits);
                return Ok(ExtremalResult { value: f.certify(&value), witness, attained, global: false });
            }
            s -= 1;
            digits[s] += 1;
            if digits[s] < p {
                break;
            }
            digits[s] = 0;
        }
    }
}

fn greedy(f: &SeriesPPolynomial, window: Window) -> Result<ExtremalResult> {
    let p = f.p;
    let n = f.variables();
    let slots = n * window.width();
    let to_map = |s: &LaurentSeries| -> BTreeMap<i64, u32> { s.index_terms().collect() };
    let cutoff =
        f.coeffs.iter().flatten().chain(std::iter::once(&f.constant)).filter_map(|c| c.precision_index()).min();
    // echelon basis: pivot exponent -> (vector, digit combination)
    let mut basis: BTreeMap<i64, (BTreeMap<i64, u32>, Vec<u32>)> = BTreeMap::new();
    let sub_scaled = |v: &mut BTreeMap<i64, u32>, w: &BTreeMap<i64, u32>, c: u32| {
        for (&e, &x) in w {
            let slot = v.entry(e).or_insert(0);
            *slot = fp::sub(*slot, fp::mul(c, x, p), p);
            if *slot == 0 {
                v.remove(&e);
            }
        }
    };
    let sub_combo = |v: &mut [u32], w: &[u32], c: u32| {
        for (x, &y) in v.iter_mut().zip(w) {
            *x = fp::sub(*x, fp::mul(c, y, p), p);
        }
    };
    for s in 0..slots {
        let (j, k) = (s / window.width(), s % window.width());
        let image = f.additive_part(j, &LaurentSeries::monomial_index(p, 1, 1, window.lo + k as i64));
        let mut v = to_map(&image);
        if let Some(n) = cutoff {
            v.retain(|&e, _| e < n);
        }
        let mut combo = vec![0u32; slots];
        combo[s] = 1;
        while let Some((&e, &c)) = v.iter().next() {
            match basis.get(&e) {
                Some((w, wc)) => {
                    let factor = fp::mul(c, fp::inv(w[&e], p), p);
                    sub_scaled(&mut v, w, factor);
                    sub_combo(&mut combo, wc, factor);
                }
                None => {
                    basis.insert(e, (v, combo));
                    break;
                }
            }
        }
    }
    // reduce the constant: r = c + sum d_s A(t^e_s)
    let mut r = to_map(&f.constant);
    if let Some(n) = cutoff {
        r.retain(|&e, _| e < n);
    }
    let mut digits = vec![0u32; slots];
    for (e, (w, wc)) in &basis {
        if let Some(&c) = r.get(e) {
            let factor = fp::mul(c, fp::inv(w[e], p), p);
            sub_scaled(&mut r, w, factor);
            // subtracting `factor * w` means adding `-factor` to the digits
            sub_combo(&mut digits, wc, factor);
        }
    }
    let witness = split_witness(p, n, window, &digits);
    let value = f.eval(&witness)?;
    debug_assert_eq!(value.valuation_bound(), {
        let lead = r.keys().next().copied();
        match (lead, cutoff) {
            (Some(e), _) => Value::Finite(Ratio::from_integer(e)),
            (None, Some(n)) => Value::Finite(Ratio::from_integer(n)),
            (None, None) => Value::Infinity,
        }
    });
    Ok(ExtremalResult { value: f.certify(&value), witness, attained: value.valuation_bound(), global: false })
}

/// Whole-field optimality of a window maximum `v*` for one variable.
///
/// Write `g(b) = min_i (v(c_i) + p^i b)`. Changing the argument by `delta`
/// with `v(delta) = b` changes `A` by a term of value exactly `g(b)` when
/// the minimum is attained once, and of value at least `g(b)` at a tie. The
/// maximum cannot improve if no untied integer `b` has `g(b) = v*` and every
/// tie has `g(b) > v*`.
fn certify_global(f: &SeriesPPolynomial, v_star: Value) -> bool {
    if f.variables() != 1 {
        return false;
    }
    let Value::Finite(v_star) = v_star else { return true };
    let p = f.p as i64;
    let terms: Vec<(Ratio<i64>, i64)> = f.coeffs[0]
        .iter()
        .enumerate()
        .filter_map(|(i, c)| match c.valuation() {
            Ok(Value::Finite(v)) => Some((v, p.pow(i as u32))),
            _ => None,
        })
        .collect();
    if f.coeffs[0].iter().any(|c| !c.is_exact()) {
        return false;
    }
    if terms.is_empty() {
        return true;
    }
    let g = |b: Ratio<i64>| -> (Ratio<i64>, usize) {
        let vals: Vec<Ratio<i64>> = terms.iter().map(|(v, q)| v + b * q).collect();
        let m = *vals.iter().min().unwrap();
        (m, vals.iter().filter(|&&x| x == m).count())
    };
    // ties: intersections of two of the lines
    for (a, (va, qa)) in terms.iter().enumerate() {
        for (vb, qb) in &terms[a + 1..] {
            let b = (va - vb) / (qb - qa);
            if b.is_integer() {
                let (gb, count) = g(b);
                if count > 1 && gb <= v_star {
                    return false;
                }
            }
        }
    }
    // untied integers hitting v* exactly
    for (v, q) in &terms {
        let b = (v_star - v) / q;
        if b.is_integer() {
            let (gb, count) = g(b);
            if count == 1 && gb == v_star {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ser(terms: &[(i64, u32)]) -> LaurentSeries {
        LaurentSeries::from_terms(2, 1, terms.iter().copied(), None)
    }

    fn as_poly(c: LaurentSeries) -> SeriesPPolynomial {
        SeriesPPolynomial::new(vec![vec![ser(&[(0, 1)]), ser(&[(0, 1)])]], c).unwrap()
    }

    #[test]
    fn calibration_examples() {
        let w = Window::new(-3, 3).unwrap();
        let f = as_poly(ser(&[(-1, 1)]));
        for mode in [SearchMode::BruteForce, SearchMode::Greedy] {
            let r = extremal_search(&f, w, mode, DEFAULT_BUDGET).unwrap();
            assert_eq!(r.value, Value::int(-1));
            assert!(r.global);
        }
        let r = extremal_search(&f, w, SearchMode::BruteForce, DEFAULT_BUDGET).unwrap();
        assert!(r.witness[0].is_exact_zero());
        let g = as_poly(ser(&[(1, 1)]));
        let r = extremal_search(&g, w, SearchMode::BruteForce, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, Value::Infinity);
    }

    #[test]
    fn two_variables() {
        let one = ser(&[(0, 1)]);
        let f = SeriesPPolynomial::new(
            vec![vec![one.clone(), one.clone()], vec![LaurentSeries::zero(2), ser(&[(1, 1)])]],
            ser(&[(-1, 1)]),
        )
        .unwrap();
        let r = extremal_search(&f, Window::new(-3, 3).unwrap(), SearchMode::BruteForce, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.value, Value::Infinity);
        assert!(r.witness[0].is_exact_zero());
        assert_eq!(r.witness[1], ser(&[(-1, 1)]));
        assert!(matches!(
            extremal_search(&f, Window::new(-30, 30).unwrap(), SearchMode::BruteForce, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
