//! Evaluation of syntax trees into field elements and polynomials.

use std::collections::BTreeMap;

use num_rational::Ratio;

use super::{parse_expr, perr, variables, Expr, Node};
use crate::addpoly::{classify_additive, AdditivePolynomial, Classification, OrdinaryPolynomial, PPolynomial};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fields::{Field, FieldElement, FieldKind};
use crate::skew::SkewPolynomial;
use crate::valued::{LaurentSeries, SeriesPPolynomial};

trait Interp {
    type Out: Clone;

    fn num(&self, n: i64) -> Self::Out;
    fn var(&self, name: &str, pos: usize) -> Result<Self::Out>;
    fn add(&self, a: Self::Out, b: Self::Out, pos: usize) -> Result<Self::Out>;
    fn neg(&self, a: Self::Out) -> Self::Out;
    fn mul(&self, a: Self::Out, b: Self::Out, pos: usize) -> Result<Self::Out>;
    fn div(&self, a: Self::Out, b: Self::Out, pos: usize) -> Result<Self::Out>;
    fn pow(&self, a: Self::Out, e: Ratio<i64>, pos: usize) -> Result<Self::Out>;
    fn big_o(&self, var: &str, e: Ratio<i64>, pos: usize) -> Result<Self::Out>;

    fn eval(&self, node: &Node) -> Result<Self::Out> {
        let pos = node.pos;
        match &node.expr {
            Expr::Num(n) => Ok(self.num(*n)),
            Expr::Var(v) => self.var(v, pos),
            Expr::Add(a, b) => self.add(self.eval(a)?, self.eval(b)?, pos),
            Expr::Sub(a, b) => {
                let b = self.neg(self.eval(b)?);
                self.add(self.eval(a)?, b, pos)
            }
            Expr::Mul(a, b) => self.mul(self.eval(a)?, self.eval(b)?, pos),
            Expr::Div(a, b) => self.div(self.eval(a)?, self.eval(b)?, pos),
            Expr::Neg(a) => Ok(self.neg(self.eval(a)?)),
            Expr::Pow(a, e) => self.pow(self.eval(a)?, *e, pos),
            Expr::BigO(v, e) => self.big_o(v, *e, pos),
        }
    }
}

fn at(pos: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Parse { .. } => e,
        other => perr(pos, other.to_string()),
    }
}

fn integer_exponent(e: Ratio<i64>, pos: usize) -> Result<i64> {
    if e.is_integer() {
        Ok(e.to_integer())
    } else {
        Err(perr(pos, format!("fractional exponent {e} is only allowed on t in a series")))
    }
}

/// The generator letter of a field: `a` for extensions, `t` otherwise.
fn generator_name(field: &Field) -> Option<&'static str> {
    match field.kind() {
        FieldKind::Prime => None,
        FieldKind::Extension { .. } => Some("a"),
        FieldKind::RationalFunction | FieldKind::Laurent { .. } => Some("t"),
    }
}

struct ElementInterp<'a> {
    field: &'a Field,
}

impl ElementInterp<'_> {
    fn series_lift(&self, x: FieldElement) -> FieldElement {
        match (x.as_series(), self.field.laurent_ramification()) {
            (Some(s), Some(m)) if m > s.ramification() => FieldElement::from_series(self.field, s.lift(m)).unwrap(),
            _ => x,
        }
    }
}

impl Interp for ElementInterp<'_> {
    type Out = FieldElement;

    fn num(&self, n: i64) -> FieldElement {
        FieldElement::from_int(self.field, n)
    }

    fn var(&self, name: &str, pos: usize) -> Result<FieldElement> {
        match generator_name(self.field) {
            Some(g) if g == name => Ok(FieldElement::generator(self.field).unwrap()),
            _ => Err(perr(pos, format!("unknown variable '{name}' for field {}", self.field))),
        }
    }

    fn add(&self, a: FieldElement, b: FieldElement, pos: usize) -> Result<FieldElement> {
        a.try_add(&b).map_err(at(pos))
    }

    fn neg(&self, a: FieldElement) -> FieldElement {
        a.neg()
    }

    fn mul(&self, a: FieldElement, b: FieldElement, pos: usize) -> Result<FieldElement> {
        a.try_mul(&b).map_err(at(pos))
    }

    fn div(&self, a: FieldElement, b: FieldElement, pos: usize) -> Result<FieldElement> {
        a.try_div(&b).map_err(at(pos))
    }

    fn pow(&self, a: FieldElement, e: Ratio<i64>, pos: usize) -> Result<FieldElement> {
        if !e.is_integer() {
            let p = self.field.p();
            let is_t = a.as_series().is_some_and(|s| *s == LaurentSeries::t(p));
            if !is_t {
                return Err(perr(pos, format!("fractional exponent {e} is only allowed on t in a series")));
            }
            let s = LaurentSeries::monomial(p, 1, e).map_err(at(pos))?;
            return Ok(self.series_lift(FieldElement::from_series(self.field, s)?));
        }
        let n = e.to_integer();
        if n >= 0 {
            Ok(a.pow(n as u64))
        } else {
            Ok(a.inv().map_err(at(pos))?.pow(n.unsigned_abs()))
        }
    }

    fn big_o(&self, var: &str, e: Ratio<i64>, pos: usize) -> Result<FieldElement> {
        if self.field.laurent_precision().is_none() || var != "t" {
            return Err(perr(pos, format!("O({var}^...) is only meaningful for Laurent series")));
        }
        let p = self.field.p();
        let ram = LaurentSeries::monomial(p, 1, e).map_err(at(pos))?.ramification();
        let s = LaurentSeries::big_o(p, ram, (e * ram as i64).to_integer());
        Ok(self.series_lift(FieldElement::from_series(self.field, s)?))
    }
}

/// Parses an element of `field`, e.g. `a+1`, `(t^2+1)/(t^3+t)`, `t^-2 + O(t^5)`.
pub fn parse_element(src: &str, field: &Field) -> Result<FieldElement> {
    let interp = ElementInterp { field };
    let x = interp.eval(&parse_expr(src)?)?;
    Ok(interp.series_lift(x))
}

/// A sparse commutative polynomial in named variables over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    field: Field,
    vars: Vec<String>,
    /// exponent vector -> nonzero coefficient
    terms: BTreeMap<Vec<u64>, FieldElement>,
}

impl MPoly {
    fn constant(field: &Field, vars: &[String], c: FieldElement) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars.len()], c);
        }
        MPoly { field: field.clone(), vars: vars.to_vec(), terms }
    }

    fn as_constant(&self) -> Option<FieldElement> {
        match self.terms.len() {
            0 => Some(FieldElement::zero(&self.field)),
            1 => self.terms.get(&vec![0; self.vars.len()]).cloned(),
            _ => None,
        }
    }

    fn insert(&mut self, exps: Vec<u64>, c: FieldElement) -> Result<()> {
        let sum = match self.terms.get(&exps) {
            Some(old) => old.try_add(&c)?,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, sum);
        }
        Ok(())
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u64>, FieldElement> {
        &self.terms
    }
}

struct PolyInterp<'a> {
    elem: ElementInterp<'a>,
    vars: Vec<String>,
}

impl Interp for PolyInterp<'_> {
    type Out = MPoly;

    fn num(&self, n: i64) -> MPoly {
        MPoly::constant(self.elem.field, &self.vars, self.elem.num(n))
    }

    fn var(&self, name: &str, pos: usize) -> Result<MPoly> {
        if let Some(k) = self.vars.iter().position(|v| v == name) {
            let mut exps = vec![0; self.vars.len()];
            exps[k] = 1;
            let mut m = MPoly::constant(self.elem.field, &self.vars, FieldElement::zero(self.elem.field));
            m.terms.insert(exps, FieldElement::one(self.elem.field));
            return Ok(m);
        }
        Ok(MPoly::constant(self.elem.field, &self.vars, self.elem.var(name, pos)?))
    }

    fn add(&self, mut a: MPoly, b: MPoly, pos: usize) -> Result<MPoly> {
        for (e, c) in b.terms {
            a.insert(e, c).map_err(at(pos))?;
        }
        Ok(a)
    }

    fn neg(&self, mut a: MPoly) -> MPoly {
        for c in a.terms.values_mut() {
            *c = c.neg();
        }
        a
    }

    fn mul(&self, a: MPoly, b: MPoly, pos: usize) -> Result<MPoly> {
        let mut out = MPoly::constant(self.elem.field, &self.vars, FieldElement::zero(self.elem.field));
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert(e, ca.try_mul(cb).map_err(at(pos))?).map_err(at(pos))?;
            }
        }
        Ok(out)
    }

    fn div(&self, a: MPoly, b: MPoly, pos: usize) -> Result<MPoly> {
        let Some(c) = b.as_constant() else {
            return Err(perr(pos, "division by a non-constant polynomial"));
        };
        let inv = c.inv().map_err(at(pos))?;
        self.mul(a, MPoly::constant(self.elem.field, &self.vars, inv), pos)
    }

    fn pow(&self, a: MPoly, e: Ratio<i64>, pos: usize) -> Result<MPoly> {
        if let Some(c) = a.as_constant() {
            return Ok(MPoly::constant(self.elem.field, &self.vars, self.elem.pow(c, e, pos)?));
        }
        let n = integer_exponent(e, pos)?;
        if n < 0 {
            return Err(perr(pos, "negative power of a polynomial variable"));
        }
        if a.terms.len() == 1 {
            let (exps, c) = a.terms.iter().next().unwrap();
            let exps = exps.iter().map(|x| x * n as u64).collect();
            let mut m = MPoly::constant(self.elem.field, &self.vars, FieldElement::zero(self.elem.field));
            m.terms.insert(exps, c.pow(n as u64));
            return Ok(m);
        }
        let mut acc = self.num(1);
        for _ in 0..n {
            acc = self.mul(acc, a.clone(), pos)?;
        }
        Ok(acc)
    }

    fn big_o(&self, var: &str, e: Ratio<i64>, pos: usize) -> Result<MPoly> {
        Ok(MPoly::constant(self.elem.field, &self.vars, self.elem.big_o(var, e, pos)?))
    }
}

/// Polynomial variables: `X` alone, or `X0, X1, ...`.
fn poly_vars(node: &Node, allow_many: bool) -> Result<Vec<String>> {
    let mut names = Vec::new();
    variables(node, &mut names);
    let xs: Vec<&String> = names.iter().filter(|v| v.starts_with('X')).collect();
    if xs.iter().all(|v| v.as_str() == "X") {
        return Ok(vec!["X".to_string()]);
    }
    let mut max = 0;
    for v in &xs {
        match v[1..].parse::<usize>() {
            Ok(k) if allow_many => max = max.max(k),
            _ => return Err(perr(node.pos, format!("unexpected polynomial variable '{v}'"))),
        }
    }
    Ok((0..=max).map(|k| format!("X{k}")).collect())
}

fn parse_mpoly(src: &str, field: &Field, allow_many: bool) -> Result<MPoly> {
    let node = parse_expr(src)?;
    let vars = poly_vars(&node, allow_many)?;
    let interp = PolyInterp { elem: ElementInterp { field }, vars };
    interp.eval(&node)
}

/// A polynomial in `X` over `field`, e.g. `X^4 + a*X + 1`.
pub fn parse_ordinary(src: &str, field: &Field) -> Result<OrdinaryPolynomial> {
    let m = parse_mpoly(src, field, false)?;
    let terms: Vec<(FieldElement, usize)> = m.terms.into_iter().map(|(e, c)| (c, e[0] as usize)).collect();
    OrdinaryPolynomial::from_terms(field, &terms)
}

/// A p-polynomial in `X`: every non-constant exponent must be a power of p.
pub fn parse_ppolynomial(src: &str, field: &Field) -> Result<PPolynomial> {
    let f = parse_ordinary(src, field)?;
    let constant = f.coeff(0);
    let additive_part = f.sub(&OrdinaryPolynomial::new(field, vec![constant.clone()])?)?;
    match classify_additive(&additive_part) {
        Classification::Additive(a) => PPolynomial::new(a, constant),
        Classification::NotAdditive { exponent } => {
            Err(perr(0, format!("X^{exponent} is not a p-power term of a p-polynomial")))
        }
    }
}

/// An additive polynomial in `X` (no constant term).
pub fn parse_additive(src: &str, field: &Field) -> Result<AdditivePolynomial> {
    let f = parse_ppolynomial(src, field)?;
    if !f.constant().is_zero() {
        return Err(perr(0, "an additive polynomial has no constant term"));
    }
    Ok(f.additive().clone())
}

/// A p-polynomial in `X` or `X0, X1, ...` with Laurent series coefficients.
pub fn parse_series_ppolynomial(src: &str, field: &Field) -> Result<SeriesPPolynomial> {
    if field.laurent_precision().is_none() {
        return Err(perr(0, format!("{field} is not a Laurent series field")));
    }
    let p = field.p() as u64;
    let m = parse_mpoly(src, field, true)?;
    let n = m.vars.len();
    let mut coeffs: Vec<Vec<LaurentSeries>> = vec![Vec::new(); n];
    let mut constant = LaurentSeries::zero(field.p());
    for (exps, c) in &m.terms {
        let s = c.as_series().unwrap().clone();
        let nonzero: Vec<(usize, u64)> = exps.iter().copied().enumerate().filter(|t| t.1 > 0).collect();
        match nonzero.as_slice() {
            [] => constant = s,
            [(j, e)] => {
                let mut i = 0;
                let mut q = 1;
                while q < *e {
                    q *= p;
                    i += 1;
                }
                if q != *e {
                    return Err(perr(0, format!("{}^{e} is not a p-power term", m.vars[*j])));
                }
                if coeffs[*j].len() <= i {
                    coeffs[*j].resize(i + 1, LaurentSeries::zero(field.p()));
                }
                coeffs[*j][i] = s;
            }
            _ => return Err(perr(0, "mixed monomials are not allowed in a p-polynomial")),
        }
    }
    SeriesPPolynomial::new(coeffs, constant)
}

struct SkewInterp<'a> {
    elem: ElementInterp<'a>,
}

impl Interp for SkewInterp<'_> {
    type Out = SkewPolynomial;

    fn num(&self, n: i64) -> SkewPolynomial {
        SkewPolynomial::constant(&self.elem.num(n))
    }

    fn var(&self, name: &str, pos: usize) -> Result<SkewPolynomial> {
        if name == "f" {
            return Ok(SkewPolynomial::phi(self.elem.field));
        }
        Ok(SkewPolynomial::constant(&self.elem.var(name, pos)?))
    }

    fn add(&self, a: SkewPolynomial, b: SkewPolynomial, pos: usize) -> Result<SkewPolynomial> {
        a.add(&b).map_err(at(pos))
    }

    fn neg(&self, a: SkewPolynomial) -> SkewPolynomial {
        a.neg()
    }

    fn mul(&self, a: SkewPolynomial, b: SkewPolynomial, pos: usize) -> Result<SkewPolynomial> {
        a.mul(&b).map_err(at(pos))
    }

    fn div(&self, a: SkewPolynomial, b: SkewPolynomial, pos: usize) -> Result<SkewPolynomial> {
        if a.degree() <= Degree::Finite(0) && b.degree() == 0usize {
            let x = self.elem.div(a.coeff(0), b.coeff(0), pos)?;
            return Ok(SkewPolynomial::constant(&x));
        }
        Err(perr(pos, "only constants can be divided; use divmod for skew polynomials"))
    }

    fn pow(&self, a: SkewPolynomial, e: Ratio<i64>, pos: usize) -> Result<SkewPolynomial> {
        if a.degree() <= Degree::Finite(0) {
            return Ok(SkewPolynomial::constant(&self.elem.pow(a.coeff(0), e, pos)?));
        }
        let n = integer_exponent(e, pos)?;
        if n < 0 {
            return Err(perr(pos, "negative power of a skew polynomial"));
        }
        let mut acc = self.num(1);
        for _ in 0..n {
            acc = self.mul(acc, a.clone(), pos)?;
        }
        Ok(acc)
    }

    fn big_o(&self, var: &str, e: Ratio<i64>, pos: usize) -> Result<SkewPolynomial> {
        Ok(SkewPolynomial::constant(&self.elem.big_o(var, e, pos)?))
    }
}

/// A skew polynomial with `f` standing for phi, e.g. `f^2 + a*f + 1`.
pub fn parse_skew(src: &str, field: &Field) -> Result<SkewPolynomial> {
    SkewInterp { elem: ElementInterp { field } }.eval(&parse_expr(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FieldDescriptor;

    #[test]
    fn elements() {
        let f4 = FieldDescriptor::extension(2, 2).unwrap();
        assert_eq!(parse_element("a*a", &f4).unwrap().to_string(), "a+1");
        let k = FieldDescriptor::rational_function(3).unwrap();
        assert_eq!(parse_element("(t^2+1)/(t^3+t)", &k).unwrap().to_string(), "1/t");
        let l = FieldDescriptor::laurent(2, 1, 40).unwrap();
        let s = parse_element("t^-2 + 1 + t^3 + O(t^40)", &l).unwrap();
        assert_eq!(s.to_string(), "t^-2 + 1 + t^3 + O(t^40)");
        let r = parse_element("t^(-1/2) + O(t^(1/8))", &l).unwrap();
        assert_eq!(r.to_string(), "t^(-1/2) + O(t^(1/8))");
        assert!(matches!(parse_element("b", &f4), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_element("1/(a+a)", &f4), Err(Error::Parse { position: 1, .. })));
    }

    #[test]
    fn polynomials() {
        let f4 = FieldDescriptor::extension(2, 2).unwrap();
        let f = parse_ppolynomial("X^2 + X + a", &f4).unwrap();
        assert_eq!(f.to_string(), "X^2 + X + a");
        assert!(parse_ppolynomial("X^3 + X", &f4).is_err());
        let g = parse_ordinary("(X+1)^2", &f4).unwrap();
        assert_eq!(g.to_string(), "X^2 + 1");
        let s = parse_skew("f^2 + a*f + 1", &f4).unwrap();
        assert_eq!(s.to_string(), "f^2 + a*f + 1");
        let k = FieldDescriptor::rational_function(2).unwrap();
        assert_eq!(parse_skew("t*f", &k).unwrap().to_string(), "t*f");
        let l = FieldDescriptor::laurent(2, 1, 40).unwrap();
        let m = parse_series_ppolynomial("X0^2 - X0 + t*X1^2 - t^-1", &l).unwrap();
        assert_eq!(m.variables(), 2);
        assert!(parse_series_ppolynomial("X0*X1", &l).is_err());
    }
}
