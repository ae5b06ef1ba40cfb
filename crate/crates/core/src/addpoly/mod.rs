//! Ordinary, additive and p-polynomials over the field kernels.
//!
//! An additive polynomial `sum c_i X^{p^i}` is stored by its coefficient
//! sequence `(c_0, ..., c_m)`; a p-polynomial adds a constant term.

mod linear;
mod subgroup;

use std::fmt;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fields::{Field, FieldElement};

pub use linear::{linearize, solve_p_polynomial, LinearizedMap, RootSet, EXPLICIT_ROOT_LIMIT};
pub use subgroup::{minimal_annihilator, subgroup_to_additive};

/// Joins `(coefficient, monomial)` pairs, highest degree first, as
/// `c*X^k + ... + c0`. A unit coefficient is omitted in front of a monomial.
pub(crate) fn format_terms(terms: &[(FieldElement, String)]) -> String {
    let mut parts = Vec::new();
    for (c, mono) in terms.iter().rev() {
        if c.is_zero() {
            continue;
        }
        let s = if mono.is_empty() {
            c.fmt_coeff()
        } else if c.is_one() {
            mono.clone()
        } else {
            format!("{}*{mono}", c.fmt_coeff())
        };
        parts.push(s);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn trim(coeffs: &mut Vec<FieldElement>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

fn check_field(field: &Field, coeffs: &[FieldElement]) -> Result<()> {
    for c in coeffs {
        if !c.field().compatible(field) {
            return Err(Error::DescriptorMismatch { left: field.to_string(), right: c.field().to_string() });
        }
    }
    Ok(())
}

/// `d_0 + d_1 X + ... + d_N X^N` with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrdinaryPolynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl OrdinaryPolynomial {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElement>) -> Result<Self> {
        check_field(field, &coeffs)?;
        trim(&mut coeffs);
        Ok(OrdinaryPolynomial { field: field.clone(), coeffs })
    }

    /// From integer coefficients, lowest degree first.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| FieldElement::from_int(field, c)).collect();
        Self::new(field, coeffs).unwrap()
    }

    /// From `(coefficient, exponent)` pairs; repeated exponents add up.
    pub fn from_terms(field: &Field, terms: &[(FieldElement, usize)]) -> Result<Self> {
        let len = terms.iter().map(|t| t.1 + 1).max().unwrap_or(0);
        let mut coeffs = vec![FieldElement::zero(field); len];
        for (c, k) in terms {
            coeffs[*k] = coeffs[*k].try_add(c)?;
        }
        Self::new(field, coeffs)
    }

    pub fn zero(field: &Field) -> Self {
        OrdinaryPolynomial { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn x(field: &Field) -> Self {
        Self::from_ints(field, &[0, 1])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| FieldElement::zero(&self.field))
    }

    pub fn degree(&self) -> Degree {
        Degree::of_len(self.coeffs.len())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Exponents carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&k| !self.coeffs[k].is_zero()).collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k).try_add(&other.coeff(k))).collect::<Result<Vec<_>>>()?;
        Self::new(&self.field, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        OrdinaryPolynomial { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let mut coeffs = vec![FieldElement::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Self::new(&self.field, coeffs)
    }

    /// Horner evaluation. The point may live in a larger field, in which
    /// case the coefficients are embedded first.
    pub fn eval(&self, a: &FieldElement) -> Result<FieldElement> {
        let mut acc = FieldElement::zero(a.field());
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(a)?.try_add(&c.embed(a.field())?)?;
        }
        Ok(acc)
    }

    /// Monic normalization; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().unwrap();
                OrdinaryPolynomial { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    /// Division with remainder by a nonzero polynomial.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dl = divisor.coeffs.len();
        let Some(lc) = divisor.coeffs.last() else {
            return Err(Error::DivisionByZeroPolynomial);
        };
        let inv = lc.inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() < dl {
            return Ok((Self::zero(&self.field), self.clone()));
        }
        let mut quot = vec![FieldElement::zero(&self.field); rem.len() - dl + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dl - 1].try_mul(&inv)?;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].try_sub(&c.try_mul(d)?)?;
            }
            quot[k] = c;
        }
        rem.truncate(dl - 1);
        Ok((Self::new(&self.field, quot)?, Self::new(&self.field, rem)?))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `self^e mod modulus` by square and multiply.
    pub fn pow_mod(&self, mut e: u128, modulus: &Self) -> Result<Self> {
        let mut acc = Self::from_ints(&self.field, &[1]).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?.rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Rabin's test over a finite coefficient field F_q: `self` of degree d
    /// divides `X^{q^d} - X` and is coprime to `X^{q^{d/r}} - X` for each
    /// prime `r | d`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let q = self.field.order().ok_or_else(|| Error::NotFinite(self.field.to_string()))?;
        let Some(d) = self.degree().finite() else { return Ok(false) };
        if d == 0 {
            return Ok(false);
        }
        let h = self.monic();
        let x = Self::x(&self.field);
        // X^{q^k} mod h for k = 0..=d
        let mut frob = vec![x.rem(&h)?];
        for k in 0..d {
            frob.push(frob[k].pow_mod(q, &h)?);
        }
        if !frob[d].sub(&x)?.rem(&h)?.is_zero() {
            return Ok(false);
        }
        let mut n = d;
        let mut r = 2;
        while n > 1 {
            if n % r == 0 {
                if !h.gcd(&frob[d / r].sub(&x)?)?.degree().finite().is_some_and(|g| g == 0) {
                    return Ok(false);
                }
                while n % r == 0 {
                    n /= r;
                }
            }
            r += 1;
        }
        Ok(true)
    }

    pub fn fmt_var(&self, var: &str) -> String {
        let terms: Vec<(FieldElement, String)> =
            self.coeffs.iter().enumerate().map(|(k, c)| (c.clone(), monomial(var, k as u128))).collect();
        format_terms(&terms)
    }
}

pub(crate) fn monomial(var: &str, k: u128) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

impl fmt::Display for OrdinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("X"))
    }
}

/// `sum_{i=0}^m c_i X^{p^i}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdditivePolynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl AdditivePolynomial {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElement>) -> Result<Self> {
        check_field(field, &coeffs)?;
        trim(&mut coeffs);
        Ok(AdditivePolynomial { field: field.clone(), coeffs })
    }

    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| FieldElement::from_int(field, c)).collect();
        Self::new(field, coeffs).unwrap()
    }

    pub fn zero(field: &Field) -> Self {
        AdditivePolynomial { field: field.clone(), coeffs: Vec::new() }
    }

    /// The polynomial X.
    pub fn identity(field: &Field) -> Self {
        Self::from_ints(field, &[1])
    }

    /// The Artin-Schreier polynomial X^p - X.
    pub fn artin_schreier(field: &Field) -> Self {
        Self::from_ints(field, &[-1, 1])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| FieldElement::zero(&self.field))
    }

    /// The p-degree m.
    pub fn p_degree(&self) -> Degree {
        Degree::of_len(self.coeffs.len())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().unwrap();
                AdditivePolynomial { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    /// The same polynomial with coefficients moved into `target`.
    pub fn embed(&self, target: &Field) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.embed(target)).collect::<Result<Vec<_>>>()?;
        Self::new(target, coeffs)
    }

    /// Evaluates by repeated Frobenius; the point may live in a larger field.
    pub fn eval(&self, a: &FieldElement) -> Result<FieldElement> {
        let mut acc = FieldElement::zero(a.field());
        let mut power = a.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = power.frobenius();
            }
            if !c.is_zero() {
                acc = acc.try_add(&c.embed(a.field())?.try_mul(&power)?)?;
            }
        }
        Ok(acc)
    }

    pub fn expand(&self) -> OrdinaryPolynomial {
        let p = self.field.p() as usize;
        let terms: Vec<(FieldElement, usize)> =
            self.coeffs.iter().enumerate().map(|(i, c)| (c.clone(), p.pow(i as u32))).collect();
        OrdinaryPolynomial::from_terms(&self.field, &terms).unwrap()
    }

    pub fn fmt_var(&self, var: &str) -> String {
        let p = self.field.p() as u128;
        let terms: Vec<(FieldElement, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), monomial(var, p.pow(i as u32)).to_string()))
            .collect();
        format_terms(&terms)
    }
}

impl fmt::Display for AdditivePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("X"))
    }
}

/// An additive polynomial plus a constant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PPolynomial {
    additive: AdditivePolynomial,
    constant: FieldElement,
}

impl PPolynomial {
    pub fn new(additive: AdditivePolynomial, constant: FieldElement) -> Result<Self> {
        if !constant.field().compatible(additive.field()) {
            return Err(Error::DescriptorMismatch {
                left: additive.field().to_string(),
                right: constant.field().to_string(),
            });
        }
        Ok(PPolynomial { additive, constant })
    }

    /// `X^p - X - a`.
    pub fn artin_schreier(a: &FieldElement) -> Self {
        PPolynomial { additive: AdditivePolynomial::artin_schreier(a.field()), constant: a.neg() }
    }

    pub fn additive(&self) -> &AdditivePolynomial {
        &self.additive
    }

    pub fn constant(&self) -> &FieldElement {
        &self.constant
    }

    pub fn field(&self) -> &Field {
        self.additive.field()
    }

    pub fn eval(&self, a: &FieldElement) -> Result<FieldElement> {
        self.additive.eval(a)?.try_add(&self.constant.embed(a.field())?)
    }

    pub fn expand(&self) -> OrdinaryPolynomial {
        let mut f = self.additive.expand();
        if f.coeffs.is_empty() {
            f.coeffs.push(FieldElement::zero(&f.field));
        }
        f.coeffs[0] = &f.coeffs[0] + &self.constant;
        trim(&mut f.coeffs);
        f
    }
}

impl fmt::Display for PPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.additive.is_zero() {
            return f.write_str(&self.constant.fmt_coeff());
        }
        if self.constant.is_zero() {
            return write!(f, "{}", self.additive);
        }
        write!(f, "{} + {}", self.additive, self.constant.fmt_coeff())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Classification {
    Additive(AdditivePolynomial),
    /// The first (lowest) exponent that is not a power of p.
    NotAdditive {
        exponent: usize,
    },
}

/// Recognizes the additive polynomials: every exponent in the support must
/// be a power of p (in particular there is no constant term).
pub fn classify_additive(f: &OrdinaryPolynomial) -> Classification {
    let p = f.field.p() as usize;
    let mut coeffs = Vec::new();
    for k in f.support() {
        let mut e = 1usize;
        let mut i = 0;
        while e < k {
            e *= p;
            i += 1;
        }
        if e != k {
            return Classification::NotAdditive { exponent: k };
        }
        if coeffs.len() <= i {
            coeffs.resize(i + 1, FieldElement::zero(&f.field));
        }
        coeffs[i] = f.coeffs[k].clone();
    }
    Classification::Additive(AdditivePolynomial::new(&f.field, coeffs).unwrap())
}

/// Whether `f(a+b) = f(a) + f(b)` for all `a, b` in `s`.
pub fn is_additive_on(f: &OrdinaryPolynomial, s: &[FieldElement]) -> Result<bool> {
    let values = s.iter().map(|a| f.eval(a)).collect::<Result<Vec<_>>>()?;
    for (i, a) in s.iter().enumerate() {
        for (j, b) in s.iter().enumerate().skip(i) {
            let lhs = f.eval(&a.try_add(b)?)?;
            if lhs != values[i].try_add(&values[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FieldDescriptor;

    #[test]
    fn classification() {
        let f2 = FieldDescriptor::prime(2).unwrap();
        let f = OrdinaryPolynomial::from_ints(&f2, &[0, 1, 0, 0, 1]);
        let Classification::Additive(a) = classify_additive(&f) else { panic!() };
        assert_eq!(a, AdditivePolynomial::from_ints(&f2, &[1, 0, 1]));
        assert_eq!(a.to_string(), "X^4 + X");
        let g = OrdinaryPolynomial::from_ints(&f2, &[0, 0, 1, 1]);
        assert_eq!(classify_additive(&g), Classification::NotAdditive { exponent: 3 });
        let h = OrdinaryPolynomial::from_ints(&f2, &[1, 1]);
        assert_eq!(classify_additive(&h), Classification::NotAdditive { exponent: 0 });
    }

    #[test]
    fn additivity_depends_on_the_test_set() {
        let f2 = FieldDescriptor::prime(2).unwrap();
        let f4 = FieldDescriptor::extension(2, 2).unwrap();
        let g = OrdinaryPolynomial::from_ints(&f2, &[0, 0, 1, 1]);
        let small: Vec<_> = FieldElement::enumerate(&f2).unwrap().collect();
        let large: Vec<_> = FieldElement::enumerate(&f4).unwrap().collect();
        assert!(is_additive_on(&g, &small).unwrap());
        assert!(!is_additive_on(&g, &large).unwrap());
    }

    #[test]
    fn evaluation() {
        let f4 = FieldDescriptor::extension(2, 2).unwrap();
        let w = FieldElement::generator(&f4).unwrap();
        let wp = AdditivePolynomial::artin_schreier(&f4);
        assert!(wp.eval(&w).unwrap().is_one());
        let a = AdditivePolynomial::from_ints(&f4, &[1, 0, 1]);
        assert!(a.eval(&w).unwrap().is_zero());
        assert_eq!(a.expand().to_string(), "X^4 + X");
        let pp = PPolynomial::new(wp, w.clone()).unwrap();
        assert_eq!(pp.to_string(), "X^2 + X + a");
        assert_eq!(pp.expand().to_string(), "X^2 + X + a");
    }
}
