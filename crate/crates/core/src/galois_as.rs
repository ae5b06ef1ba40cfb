//! Artin-Schreier tools over finite fields: trace, irreducibility of
//! `X^p - X - a`, additive Hilbert 90, coset representatives modulo
//! `{c^p - c}`, and root recovery from a prime factor of a p-polynomial.

use crate::addpoly::{linearize, AdditivePolynomial, OrdinaryPolynomial, PPolynomial};
use crate::error::{Error, Result};
use crate::fields::{Field, FieldElement, Subfield};
use crate::linalg::Matrix;

/// A finite extension L|K of finite fields. Its Galois group is cyclic,
/// generated by `sigma = x -> x^{|K|}`.
#[derive(Clone, Debug)]
pub struct CyclicExtension {
    base: Subfield,
}

impl CyclicExtension {
    pub fn new(base: Subfield) -> Self {
        CyclicExtension { base }
    }

    /// L over its prime field.
    pub fn over_prime(l: &Field) -> Result<Self> {
        Ok(CyclicExtension { base: Subfield::prime(l)? })
    }

    pub fn top(&self) -> &Field {
        self.base.ambient()
    }

    pub fn base(&self) -> &Subfield {
        &self.base
    }

    /// `sigma` is the `generator_power`-th power of Frobenius.
    pub fn generator_power(&self) -> usize {
        self.base.degree()
    }

    /// `[L:K]`, the order of `sigma`.
    pub fn degree(&self) -> usize {
        self.base.index()
    }

    pub fn sigma(&self, a: &FieldElement) -> FieldElement {
        a.frobenius_pow(self.generator_power())
    }

    /// The orbit `a, sigma a, ..., sigma^{deg-1} a`.
    pub fn orbit(&self, a: &FieldElement) -> Vec<FieldElement> {
        let mut out = vec![a.clone()];
        for j in 1..self.degree() {
            out.push(self.sigma(&out[j - 1]));
        }
        out
    }

    fn element(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.field().compatible(self.top()) {
            Ok(a.clone())
        } else {
            Err(Error::DescriptorMismatch { left: self.top().to_string(), right: a.field().to_string() })
        }
    }
}

/// `sum_{j} sigma^j a`, an element of K.
pub fn trace(a: &FieldElement, e: &CyclicExtension) -> Result<FieldElement> {
    let a = e.element(a)?;
    Ok(e.orbit(&a).iter().fold(FieldElement::zero(e.top()), |acc, x| &acc + x))
}

/// `X^p - X - a` is irreducible over the finite field of `a` iff the
/// absolute trace of `a` is nonzero.
pub fn as_irreducible(a: &FieldElement) -> Result<bool> {
    let e = CyclicExtension::over_prime(a.field())?;
    Ok(!trace(a, &e)?.is_zero())
}

/// The first element of L, in index order, with nonzero trace to K.
pub fn first_nonzero_trace(e: &CyclicExtension) -> Result<FieldElement> {
    for x in FieldElement::enumerate(e.top())? {
        if !trace(&x, e)?.is_zero() {
            return Ok(x);
        }
    }
    unreachable!("the trace of a finite separable extension is onto")
}

/// Solves `sigma theta - theta = c` for `c` of trace zero:
/// `theta = -(1/s) sum_j phi_j sigma^j(a)` with `phi_j = sum_{i<j} sigma^i c`,
/// `a` an element of nonzero trace `s`.
pub fn hilbert90_additive(c: &FieldElement, e: &CyclicExtension) -> Result<FieldElement> {
    hilbert90_with(c, e, &first_nonzero_trace(e)?)
}

/// The same construction with a caller-chosen `a` of nonzero trace.
pub fn hilbert90_with(c: &FieldElement, e: &CyclicExtension, a: &FieldElement) -> Result<FieldElement> {
    let c = e.element(c)?;
    let tc = trace(&c, e)?;
    if !tc.is_zero() {
        return Err(Error::NonzeroTrace(tc.to_string()));
    }
    let s = trace(a, e)?;
    if s.is_zero() {
        return Err(Error::InvalidDescriptor(format!("{a} has trace zero")));
    }
    let top = e.top();
    let c_orbit = e.orbit(&c);
    let a_orbit = e.orbit(a);
    let mut cocycle = FieldElement::zero(top);
    let mut sum = FieldElement::zero(top);
    for j in 0..e.degree() {
        sum = &sum + &(&cocycle * &a_orbit[j]);
        cocycle = &cocycle + &c_orbit[j];
    }
    Ok(-(&sum / &s))
}

/// The least element (by index) of `a + {c^p - c : c in F}`.
pub fn as_shift_reduce(a: &FieldElement) -> Result<FieldElement> {
    let field = a.field().clone();
    let n = field.degree().ok_or_else(|| Error::NotFinite(field.to_string()))?;
    let p = field.p();
    let map = linearize(&AdditivePolynomial::artin_schreier(&field), &field)?;
    // rows are image vectors with coordinates reversed, so that echelon
    // pivots sit on the most significant coordinate
    let rows: Vec<Vec<u32>> = (0..n).map(|j| map.matrix().column(j).into_iter().rev().collect()).collect();
    let mut m = Matrix::from_rows(p, n, &rows);
    let pivots = m.rref();
    let mut v: Vec<u32> = a.coords().unwrap().into_iter().rev().collect();
    for (r, &pc) in pivots.iter().enumerate() {
        let f = v[pc];
        if f != 0 {
            for (j, x) in v.iter_mut().enumerate() {
                *x = (*x + (p - f) * m.get(r, j) % p) % p;
            }
        }
    }
    v.reverse();
    FieldElement::from_coords(&field, &v)
}

/// Given a monic irreducible factor `h` of degree `d` prime to p of the
/// p-polynomial `f`, returns the root `d^{-1}(-h_{d-1})` of `f` in F.
pub fn root_from_prime_factor(f: &PPolynomial, h: &OrdinaryPolynomial) -> Result<FieldElement> {
    let field = f.field().clone();
    let d = h.degree().finite().ok_or_else(|| Error::NotAFactor("0".into()))?;
    if !h.is_monic() || !h.is_irreducible()? {
        return Err(Error::NotIrreducible(h.to_string()));
    }
    if !f.expand().rem(h)?.is_zero() {
        return Err(Error::NotAFactor(h.to_string()));
    }
    if d % field.p() as usize == 0 {
        return Err(Error::DegreeDivisibleByP(d));
    }
    let root = h.coeff(d - 1).neg().try_div(&FieldElement::from_int(&field, d as i64))?;
    debug_assert!(f.eval(&root)?.is_zero());
    Ok(root)
}

/// `X^p - X - a` for the first `a` of nonzero absolute trace: a p-polynomial
/// without roots in F.
pub fn p_closed_counterexample(field: &Field) -> Result<PPolynomial> {
    let a = first_nonzero_trace(&CyclicExtension::over_prime(field)?)?;
    Ok(PPolynomial::artin_schreier(&a))
}
