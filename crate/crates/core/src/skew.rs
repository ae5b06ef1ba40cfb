//! The twisted polynomial ring K[phi] with `phi c = c^p phi`.
//!
//! Multiplication is composition of the associated additive maps. Left
//! division (quotient on the left) works over every field; right division
//! needs p-th roots and reports the missing one as a structured outcome.

use std::fmt;

use crate::addpoly::{format_terms, monomial, AdditivePolynomial};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fields::{fppoly, Field, FieldElement, FieldKind, RatFn};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewPolynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl SkewPolynomial {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElement>) -> Result<Self> {
        for c in &coeffs {
            if !c.field().compatible(field) {
                return Err(Error::DescriptorMismatch { left: field.to_string(), right: c.field().to_string() });
            }
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(SkewPolynomial { field: field.clone(), coeffs })
    }

    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| FieldElement::from_int(field, c)).collect();
        Self::new(field, coeffs).unwrap()
    }

    pub fn zero(field: &Field) -> Self {
        SkewPolynomial { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Self {
        Self::from_ints(field, &[1])
    }

    /// `phi` itself.
    pub fn phi(field: &Field) -> Self {
        Self::from_ints(field, &[0, 1])
    }

    /// `c phi^k`.
    pub fn term(c: &FieldElement, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![FieldElement::zero(field); k];
        coeffs.push(c.clone());
        Self::new(field, coeffs).unwrap()
    }

    pub fn constant(c: &FieldElement) -> Self {
        Self::term(c, 0)
    }

    pub fn from_additive(a: &AdditivePolynomial) -> Self {
        SkewPolynomial { field: a.field().clone(), coeffs: a.coeffs().to_vec() }
    }

    pub fn to_additive(&self) -> AdditivePolynomial {
        AdditivePolynomial::new(&self.field, self.coeffs.clone()).unwrap()
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

    pub fn degree(&self) -> Degree {
        Degree::of_len(self.coeffs.len())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Scales on the left by the inverse leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().unwrap();
                SkewPolynomial { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| &inv * c).collect() }
            }
        }
    }

    /// The additive map `a -> sum c_i a^{p^i}`.
    pub fn apply(&self, a: &FieldElement) -> Result<FieldElement> {
        self.to_additive().eval(a)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.compatible(&other.field) {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch { left: self.field.to_string(), right: other.field.to_string() })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i).try_add(&other.coeff(i))).collect::<Result<Vec<_>>>()?;
        Self::new(&self.field, coeffs)
    }

    pub fn neg(&self) -> Self {
        SkewPolynomial { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// `(sum a_i phi^i)(sum b_j phi^j) = sum a_i b_j^{p^i} phi^{i+j}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let mut coeffs = vec![FieldElement::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        let mut twisted: Vec<FieldElement> = other.coeffs.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                twisted = twisted.iter().map(|b| b.frobenius()).collect();
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in twisted.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].try_add(&a.try_mul(b)?)?;
                }
            }
        }
        Self::new(&self.field, coeffs)
    }

    pub fn fmt_var(&self, var: &str) -> String {
        let terms: Vec<(FieldElement, String)> =
            self.coeffs.iter().enumerate().map(|(i, c)| (c.clone(), monomial(var, i as u128))).collect();
        format_terms(&terms)
    }
}

impl fmt::Display for SkewPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("f"))
    }
}

/// `s_prime = q * s + r` with `deg r < deg s`, by repeated elimination of
/// the top term with `d_n c_m^{-p^{n-m}} phi^{n-m}`.
pub fn left_divmod(s_prime: &SkewPolynomial, s: &SkewPolynomial) -> Result<(SkewPolynomial, SkewPolynomial)> {
    s_prime.check(s)?;
    let Some(lc) = s.leading() else {
        return Err(Error::DivisionByZeroPolynomial);
    };
    let field = s.field.clone();
    let m = s.coeffs.len() - 1;
    let mut q = vec![FieldElement::zero(&field); s_prime.coeffs.len().saturating_sub(m)];
    let mut r = s_prime.clone();
    while r.coeffs.len() > m {
        let n = r.coeffs.len() - 1;
        let k = n - m;
        let c = r.coeffs[n].try_div(&lc.frobenius_pow(k))?;
        r = r.sub(&SkewPolynomial::term(&c, k).mul(s)?)?;
        q[k] = c;
    }
    Ok((SkewPolynomial::new(&field, q)?, r))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RightDivision {
    /// `s_prime = s * q + r` with `deg r < deg s`.
    Quotient { q: SkewPolynomial, r: SkewPolynomial },
    /// The element whose `p^m`-th root is needed but missing from the field.
    PthRootObstruction(FieldElement),
}

/// `s_prime = s * q + r`; the quotient term for the top coefficient `d_n` is
/// `(c_m^{-1} d_n)^{1/p^m} phi^{n-m}`.
pub fn right_divmod(s_prime: &SkewPolynomial, s: &SkewPolynomial) -> Result<RightDivision> {
    s_prime.check(s)?;
    let Some(lc) = s.leading() else {
        return Err(Error::DivisionByZeroPolynomial);
    };
    let field = s.field.clone();
    let m = s.coeffs.len() - 1;
    let mut q = vec![FieldElement::zero(&field); s_prime.coeffs.len().saturating_sub(m)];
    let mut r = s_prime.clone();
    while r.coeffs.len() > m {
        let n = r.coeffs.len() - 1;
        let k = n - m;
        let target = r.coeffs[n].try_div(lc)?;
        let mut root = target.clone();
        for _ in 0..m {
            match root.pth_root() {
                Some(x) => root = x,
                None => return Ok(RightDivision::PthRootObstruction(target)),
            }
        }
        r = r.sub(&s.mul(&SkewPolynomial::term(&root, k))?)?;
        q[k] = root;
    }
    Ok(RightDivision::Quotient { q: SkewPolynomial::new(&field, q)?, r })
}

/// Greatest common right divisor, monic.
pub fn gcrd(r: &SkewPolynomial, s: &SkewPolynomial) -> Result<SkewPolynomial> {
    r.check(s)?;
    if r.is_zero() && s.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (mut a, mut b) = (r.clone(), s.clone());
    while !b.is_zero() {
        let rem = left_divmod(&a, &b)?.1;
        a = b;
        b = rem;
    }
    Ok(a.monic())
}

/// Least common left multiple, monic, from the extended Euclidean chain:
/// when `u r + v s = 0` first occurs, `u r` is the lclm.
pub fn lclm(r: &SkewPolynomial, s: &SkewPolynomial) -> Result<SkewPolynomial> {
    r.check(s)?;
    if r.is_zero() || s.is_zero() {
        return Err(Error::ZeroInput);
    }
    let field = r.field.clone();
    let (mut a, mut b) = (r.clone(), s.clone());
    let (mut u0, mut u1) = (SkewPolynomial::one(&field), SkewPolynomial::zero(&field));
    while !b.is_zero() {
        let (q, rem) = left_divmod(&a, &b)?;
        let u2 = u0.sub(&q.mul(&u1)?)?;
        a = b;
        b = rem;
        u0 = u1;
        u1 = u2;
    }
    Ok(u1.mul(r)?.monic())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OreWitness {
    /// No nonzero `u, v` of degree at most `bound` with coefficients from
    /// the candidate pool satisfy `phi u = c phi v`.
    DisjointUpToBound {
        bound: usize,
        candidates: usize,
    },
    CommonElement {
        u: SkewPolynomial,
        v: SkewPolynomial,
    },
}

/// Searches for a common nonzero element of `phi K[phi]` and `c phi K[phi]`.
///
/// Comparing coefficients, `phi u = c phi v` means `u_i^p = c v_i^p` for each
/// `i`, so position `i` contributes exactly when `c v_i^p` has a p-th root.
/// Candidates for `v_i` are the nonzero polynomials of degree at most
/// `bound` in F_p[t].
pub fn right_ore_witness(c: &FieldElement, bound: usize) -> Result<OreWitness> {
    let field = c.field().clone();
    if field.is_perfect() {
        return Err(Error::PerfectFieldMisuse(format!("{field} is perfect")));
    }
    if c.is_zero() || c.pth_root().is_some() {
        return Err(Error::PerfectFieldMisuse(format!("{c} has a p-th root")));
    }
    let p = field.p();
    let mut candidates = 0usize;
    for deg in 0..=bound {
        for monic in fppoly::monic_polys(p, deg) {
            for scale in 1..p {
                let poly = monic.scale(scale);
                let v = match field.kind() {
                    FieldKind::RationalFunction => FieldElement::from_ratfn(&field, RatFn::from_poly(poly))?,
                    _ => FieldElement::from_poly(&field, &poly)?,
                };
                for i in 0..=bound {
                    candidates += 1;
                    if let Some(u) = c.try_mul(&v.frobenius())?.pth_root() {
                        return Ok(OreWitness::CommonElement {
                            u: SkewPolynomial::term(&u, i),
                            v: SkewPolynomial::term(&v, i),
                        });
                    }
                }
            }
        }
    }
    Ok(OreWitness::DisjointUpToBound { bound, candidates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FieldDescriptor;

    fn f4() -> (Field, FieldElement) {
        let f = FieldDescriptor::extension(2, 2).unwrap();
        let w = FieldElement::generator(&f).unwrap();
        (f, w)
    }

    #[test]
    fn twisted_product() {
        let (f, w) = f4();
        let prod = SkewPolynomial::phi(&f).mul(&SkewPolynomial::constant(&w)).unwrap();
        assert_eq!(prod.to_string(), "(a+1)*f");
        let f2 = FieldDescriptor::prime(2).unwrap();
        let x = SkewPolynomial::from_ints(&f2, &[1, 1]);
        assert_eq!(x.mul(&x).unwrap().to_string(), "f^2 + 1");
    }

    #[test]
    fn left_division_example() {
        let (f, w) = f4();
        let num = SkewPolynomial::from_ints(&f, &[0, 0, 1]);
        let den = SkewPolynomial::new(&f, vec![w.clone(), FieldElement::one(&f)]).unwrap();
        let (q, r) = left_divmod(&num, &den).unwrap();
        assert_eq!(format!("q = {q}, r = {r}"), "q = f + (a+1), r = 1");
        let (q, r) = left_divmod(&SkewPolynomial::phi(&f), &num).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, SkewPolynomial::phi(&f));
        assert_eq!(left_divmod(&num, &SkewPolynomial::zero(&f)), Err(Error::DivisionByZeroPolynomial));
    }

    #[test]
    fn right_division_needs_roots() {
        let k = FieldDescriptor::rational_function(2).unwrap();
        let t = FieldElement::generator(&k).unwrap();
        let tphi = SkewPolynomial::term(&t, 1);
        let phi = SkewPolynomial::phi(&k);
        assert_eq!(right_divmod(&tphi, &phi).unwrap(), RightDivision::PthRootObstruction(t.clone()));
        let (q, r) = left_divmod(&tphi, &phi).unwrap();
        assert_eq!(q, SkewPolynomial::constant(&t));
        assert!(r.is_zero());
    }

    #[test]
    fn gcrd_and_lclm() {
        let f2 = FieldDescriptor::prime(2).unwrap();
        let a = SkewPolynomial::from_ints(&f2, &[1, 0, 1]);
        let b = SkewPolynomial::from_ints(&f2, &[1, 1]);
        assert_eq!(gcrd(&a, &b).unwrap(), b);
        let l = lclm(&SkewPolynomial::phi(&f2), &b).unwrap();
        assert_eq!(l.to_string(), "f^2 + f");
        assert_eq!(gcrd(&b, &SkewPolynomial::zero(&f2)).unwrap(), b);
        assert_eq!(lclm(&b, &SkewPolynomial::zero(&f2)), Err(Error::ZeroInput));
    }

    #[test]
    fn ore_witness() {
        let k2 = FieldDescriptor::rational_function(2).unwrap();
        let t = FieldElement::generator(&k2).unwrap();
        assert!(matches!(right_ore_witness(&t, 3), Ok(OreWitness::DisjointUpToBound { bound: 3, .. })));
        assert!(matches!(right_ore_witness(&(&t * &t), 3), Err(Error::PerfectFieldMisuse(_))));
        let k3 = FieldDescriptor::rational_function(3).unwrap();
        let t3 = FieldElement::generator(&k3).unwrap();
        assert!(matches!(right_ore_witness(&t3.pow(3), 2), Err(Error::PerfectFieldMisuse(_))));
        assert!(matches!(right_ore_witness(&t3.pow(2), 2), Ok(OreWitness::DisjointUpToBound { .. })));
    }
}
