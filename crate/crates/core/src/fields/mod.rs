//! Field kernels of characteristic p.
//!
//! Four kernels are provided: prime fields F_p, extension fields
//! F_p[a]/(g) for a monic irreducible `g`, the rational function field
//! F_p(t), and truncated Laurent series F_p((t)). Every [`FieldElement`]
//! carries a shared [`FieldDescriptor`]; binary operations check that both
//! operands live in the same field.

pub mod fp;
pub mod fppoly;
pub mod ratfn;
mod subfield;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::Ratio;
use rand::Rng;

use crate::error::{Error, Result};
use crate::valued::series::LaurentSeries;
pub use fppoly::FpPoly;
pub use ratfn::RatFn;
pub use subfield::Subfield;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime,
    Extension {
        modulus: FpPoly,
    },
    RationalFunction,
    /// Laurent series; `ramification` and `precision` are the defaults used
    /// when building elements (individual series carry their own).
    Laurent {
        ramification: u32,
        precision: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    p: u32,
    kind: FieldKind,
}

pub type Field = Arc<FieldDescriptor>;

fn check_characteristic(p: u32) -> Result<()> {
    if !fp::is_prime(p) {
        return Err(Error::InvalidDescriptor(format!("{p} is not prime")));
    }
    if p >= fp::MAX_CHARACTERISTIC {
        return Err(Error::InvalidDescriptor(format!(
            "characteristic {p} exceeds the supported bound {}",
            fp::MAX_CHARACTERISTIC
        )));
    }
    Ok(())
}

impl FieldDescriptor {
    pub fn prime(p: u32) -> Result<Field> {
        check_characteristic(p)?;
        Ok(Arc::new(FieldDescriptor { p, kind: FieldKind::Prime }))
    }

    /// F_{p^n} defined by the lexicographically least monic irreducible of degree n.
    pub fn extension(p: u32, n: usize) -> Result<Field> {
        check_characteristic(p)?;
        if n == 0 {
            return Err(Error::InvalidDescriptor("extension degree must be at least 1".into()));
        }
        Self::with_modulus(fppoly::least_irreducible(p, n))
    }

    pub fn with_modulus(modulus: FpPoly) -> Result<Field> {
        let p = modulus.p();
        check_characteristic(p)?;
        if !modulus.is_monic() || modulus.deg() == 0 {
            return Err(Error::InvalidDescriptor(format!(
                "modulus {} must be monic of degree at least 1",
                modulus.fmt_var("a")
            )));
        }
        if !modulus.is_irreducible() {
            return Err(Error::InvalidDescriptor(format!("modulus {} is reducible over F_{p}", modulus.fmt_var("a"))));
        }
        Ok(Arc::new(FieldDescriptor { p, kind: FieldKind::Extension { modulus } }))
    }

    pub fn rational_function(p: u32) -> Result<Field> {
        check_characteristic(p)?;
        Ok(Arc::new(FieldDescriptor { p, kind: FieldKind::RationalFunction }))
    }

    pub fn laurent(p: u32, ramification: u32, precision: i64) -> Result<Field> {
        check_characteristic(p)?;
        let mut m = 1u32;
        while m < ramification {
            m = m.saturating_mul(p);
        }
        if m != ramification {
            return Err(Error::InvalidDescriptor(format!("ramification {ramification} is not a power of {p}")));
        }
        Ok(Arc::new(FieldDescriptor { p, kind: FieldKind::Laurent { ramification, precision } }))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    /// Degree over F_p for finite kernels.
    pub fn degree(&self) -> Option<usize> {
        match &self.kind {
            FieldKind::Prime => Some(1),
            FieldKind::Extension { modulus } => Some(modulus.deg()),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.degree().is_some()
    }

    pub fn is_perfect(&self) -> bool {
        self.is_finite()
    }

    /// Number of elements, for finite kernels.
    pub fn order(&self) -> Option<u128> {
        self.degree().map(|n| (self.p as u128).pow(n as u32))
    }

    pub fn modulus(&self) -> Option<&FpPoly> {
        match &self.kind {
            FieldKind::Extension { modulus } => Some(modulus),
            _ => None,
        }
    }

    /// Default precision of the Laurent kernel.
    pub fn laurent_precision(&self) -> Option<i64> {
        match self.kind {
            FieldKind::Laurent { precision, .. } => Some(precision),
            _ => None,
        }
    }

    pub fn laurent_ramification(&self) -> Option<u32> {
        match self.kind {
            FieldKind::Laurent { ramification, .. } => Some(ramification),
            _ => None,
        }
    }

    /// Same field for arithmetic purposes. Laurent descriptors only need to
    /// agree on p, since each series carries its own precision data.
    pub fn compatible(&self, other: &FieldDescriptor) -> bool {
        match (&self.kind, &other.kind) {
            (FieldKind::Laurent { .. }, FieldKind::Laurent { .. }) => self.p == other.p,
            _ => self == other,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.p;
        match &self.kind {
            FieldKind::Prime => write!(f, "fp:{p}"),
            FieldKind::Extension { modulus } => {
                write!(f, "fq:{p}^{}:mod={}", modulus.deg(), modulus.fmt_var("a"))
            }
            FieldKind::RationalFunction => write!(f, "ratfn:{p}"),
            FieldKind::Laurent { ramification, precision } => {
                write!(f, "laurent:{p}:prec={precision}:ram={ramification}")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Prime(u32),
    /// Coefficients of `1, a, ..., a^{n-1}`; always length n.
    Ext(Vec<u32>),
    Rat(RatFn),
    Series(LaurentSeries),
}

/// A value in one of the field kernels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    repr: Repr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn mismatch(a: &Field, b: &Field) -> Error {
    Error::DescriptorMismatch { left: a.to_string(), right: b.to_string() }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p
    }

    pub fn from_int(field: &Field, n: i64) -> FieldElement {
        let p = field.p;
        let c = fp::reduce(n, p);
        let repr = match &field.kind {
            FieldKind::Prime => Repr::Prime(c),
            FieldKind::Extension { modulus } => {
                let mut v = vec![0; modulus.deg()];
                v[0] = c;
                Repr::Ext(v)
            }
            FieldKind::RationalFunction => Repr::Rat(RatFn::from_poly(FpPoly::constant(p, c))),
            FieldKind::Laurent { .. } => Repr::Series(LaurentSeries::monomial_index(p, 1, c, 0)),
        };
        FieldElement { field: field.clone(), repr }
    }

    pub fn zero(field: &Field) -> FieldElement {
        Self::from_int(field, 0)
    }

    pub fn one(field: &Field) -> FieldElement {
        Self::from_int(field, 1)
    }

    /// The distinguished generator: `a` for extensions, `t` for function
    /// fields and series. Absent for prime fields.
    pub fn generator(field: &Field) -> Option<FieldElement> {
        let p = field.p;
        let repr = match &field.kind {
            FieldKind::Prime => return None,
            FieldKind::Extension { modulus } => {
                let n = modulus.deg();
                let x = FpPoly::x(p).rem(modulus);
                let mut v: Vec<u32> = x.coeffs().to_vec();
                v.resize(n, 0);
                Repr::Ext(v)
            }
            FieldKind::RationalFunction => Repr::Rat(RatFn::from_poly(FpPoly::x(p))),
            FieldKind::Laurent { .. } => Repr::Series(LaurentSeries::t(p)),
        };
        Some(FieldElement { field: field.clone(), repr })
    }

    /// Element of a finite kernel from coordinates in the power basis.
    pub fn from_coords(field: &Field, coords: &[u32]) -> Result<FieldElement> {
        let p = field.p;
        match &field.kind {
            FieldKind::Prime => {
                Ok(FieldElement { field: field.clone(), repr: Repr::Prime(coords.first().copied().unwrap_or(0) % p) })
            }
            FieldKind::Extension { modulus } => {
                let n = modulus.deg();
                let poly = FpPoly::new(p, coords.to_vec()).rem(modulus);
                let mut v = poly.coeffs().to_vec();
                v.resize(n, 0);
                Ok(FieldElement { field: field.clone(), repr: Repr::Ext(v) })
            }
            _ => Err(Error::NotFinite(field.to_string())),
        }
    }

    /// Reduces a polynomial in the generator into the field (finite kernels
    /// take it modulo the defining polynomial; F_p(t) takes it as is).
    pub fn from_poly(field: &Field, poly: &FpPoly) -> Result<FieldElement> {
        match &field.kind {
            FieldKind::RationalFunction => Ok(Self::from_ratfn(field, RatFn::from_poly(poly.clone()))?),
            FieldKind::Laurent { .. } => Ok(Self::from_series(
                field,
                LaurentSeries::from_terms(
                    field.p,
                    1,
                    poly.coeffs().iter().enumerate().map(|(k, &c)| (k as i64, c)),
                    None,
                ),
            )?),
            _ => Self::from_coords(field, poly.coeffs()),
        }
    }

    pub fn from_ratfn(field: &Field, f: RatFn) -> Result<FieldElement> {
        if field.kind != FieldKind::RationalFunction || f.p() != field.p {
            return Err(Error::DescriptorMismatch { left: field.to_string(), right: format!("ratfn:{}", f.p()) });
        }
        Ok(FieldElement { field: field.clone(), repr: Repr::Rat(f) })
    }

    pub fn from_series(field: &Field, s: LaurentSeries) -> Result<FieldElement> {
        if !matches!(field.kind, FieldKind::Laurent { .. }) || s.p() != field.p {
            return Err(Error::DescriptorMismatch { left: field.to_string(), right: format!("laurent:{}", s.p()) });
        }
        Ok(FieldElement { field: field.clone(), repr: Repr::Series(s) })
    }

    pub fn as_ratfn(&self) -> Option<&RatFn> {
        match &self.repr {
            Repr::Rat(f) => Some(f),
            _ => None,
        }
    }

    pub fn as_series(&self) -> Option<&LaurentSeries> {
        match &self.repr {
            Repr::Series(s) => Some(s),
            _ => None,
        }
    }

    /// Power-basis coordinates over F_p (finite kernels only).
    pub fn coords(&self) -> Option<Vec<u32>> {
        match &self.repr {
            Repr::Prime(c) => Some(vec![*c]),
            Repr::Ext(v) => Some(v.clone()),
            _ => None,
        }
    }

    /// The integer encoding `sum c_i p^i` of a finite-field element; this is
    /// the enumeration order and the order used for canonical representatives.
    pub fn index(&self) -> Option<u128> {
        let p = self.field.p as u128;
        self.coords().map(|v| v.iter().rev().fold(0u128, |acc, &c| acc * p + c as u128))
    }

    pub fn from_index(field: &Field, mut idx: u128) -> Result<FieldElement> {
        let n = field.degree().ok_or_else(|| Error::NotFinite(field.to_string()))?;
        let p = field.p as u128;
        let mut coords = Vec::with_capacity(n);
        for _ in 0..n {
            coords.push((idx % p) as u32);
            idx /= p;
        }
        Self::from_coords(field, &coords)
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Prime(c) => *c == 0,
            Repr::Ext(v) => v.iter().all(|&c| c == 0),
            Repr::Rat(f) => f.is_zero(),
            Repr::Series(s) => s.is_exact_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(&self.field)
    }

    fn check_same(&self, other: &FieldElement) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field.compatible(&other.field) {
            Ok(())
        } else {
            Err(mismatch(&self.field, &other.field))
        }
    }

    fn laurent_cap(&self) -> Option<Ratio<i64>> {
        self.field.laurent_precision().map(Ratio::from_integer)
    }

    fn with_repr(&self, repr: Repr) -> FieldElement {
        FieldElement { field: self.field.clone(), repr }
    }

    /// Exact field arithmetic with descriptor checking.
    pub fn arith(&self, other: &FieldElement, op: ArithOp) -> Result<FieldElement> {
        self.check_same(other)?;
        let p = self.field.p;
        let repr = match (&self.repr, &other.repr, op) {
            (Repr::Prime(a), Repr::Prime(b), op) => Repr::Prime(match op {
                ArithOp::Add => fp::add(*a, *b, p),
                ArithOp::Sub => fp::sub(*a, *b, p),
                ArithOp::Mul => fp::mul(*a, *b, p),
                ArithOp::Div => {
                    if *b == 0 {
                        return Err(Error::DivisionByZero);
                    }
                    fp::mul(*a, fp::inv(*b, p), p)
                }
            }),
            (Repr::Ext(a), Repr::Ext(b), ArithOp::Add) => {
                Repr::Ext(a.iter().zip(b).map(|(&x, &y)| fp::add(x, y, p)).collect())
            }
            (Repr::Ext(a), Repr::Ext(b), ArithOp::Sub) => {
                Repr::Ext(a.iter().zip(b).map(|(&x, &y)| fp::sub(x, y, p)).collect())
            }
            (Repr::Ext(a), Repr::Ext(b), ArithOp::Mul) => Repr::Ext(self.ext_mul(a, b)),
            (Repr::Ext(a), Repr::Ext(_), ArithOp::Div) => {
                let inv = other.inv()?;
                let Repr::Ext(b) = &inv.repr else { unreachable!() };
                Repr::Ext(self.ext_mul(a, b))
            }
            (Repr::Rat(a), Repr::Rat(b), op) => Repr::Rat(match op {
                ArithOp::Add => a.add(b),
                ArithOp::Sub => a.sub(b),
                ArithOp::Mul => a.mul(b),
                ArithOp::Div => a.div(b).ok_or(Error::DivisionByZero)?,
            }),
            (Repr::Series(a), Repr::Series(b), op) => Repr::Series(match op {
                ArithOp::Add => a.add(b),
                ArithOp::Sub => a.sub(b),
                ArithOp::Mul => a.mul(b),
                ArithOp::Div => a.div_to(b, self.laurent_cap())?,
            }),
            _ => return Err(mismatch(&self.field, &other.field)),
        };
        Ok(self.with_repr(repr))
    }

    fn ext_mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.field.p;
        let modulus = self.field.modulus().expect("extension kernel");
        let n = a.len();
        let mut acc = vec![0u64; 2 * n - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] += x as u64 * y as u64;
            }
        }
        let mut prod: Vec<u32> = acc.into_iter().map(|c| (c % p as u64) as u32).collect();
        // reduce with the monic modulus, highest degree first
        let m = modulus.coeffs();
        for k in (n..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (j, &mj) in m.iter().enumerate().take(n) {
                let slot = &mut prod[k - n + j];
                *slot = fp::sub(*slot, fp::mul(c, mj, p), p);
            }
            prod[k] = 0;
        }
        prod.truncate(n);
        prod
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.arith(other, ArithOp::Add)
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.arith(other, ArithOp::Mul)
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.arith(other, ArithOp::Div)
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.field.p;
        let repr = match &self.repr {
            Repr::Prime(a) => Repr::Prime(fp::inv(*a, p)),
            Repr::Ext(a) => {
                let modulus = self.field.modulus().unwrap();
                let inv = FpPoly::new(p, a.clone())
                    .inv_mod(modulus)
                    .expect("nonzero residues are units modulo an irreducible");
                let mut v = inv.coeffs().to_vec();
                v.resize(a.len(), 0);
                Repr::Ext(v)
            }
            Repr::Rat(f) => Repr::Rat(f.inv().ok_or(Error::DivisionByZero)?),
            Repr::Series(s) => Repr::Series(s.inv_to(self.laurent_cap())?),
        };
        Ok(self.with_repr(repr))
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.p;
        let repr = match &self.repr {
            Repr::Prime(a) => Repr::Prime(fp::neg(*a, p)),
            Repr::Ext(v) => Repr::Ext(v.iter().map(|&c| fp::neg(c, p)).collect()),
            Repr::Rat(f) => Repr::Rat(f.neg()),
            Repr::Series(s) => Repr::Series(s.neg()),
        };
        self.with_repr(repr)
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut acc = Self::one(&self.field);
        if let Repr::Series(s) = &self.repr {
            acc = self.with_repr(Repr::Series(LaurentSeries::one(s.p()).lift(s.ramification())));
        }
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `a^p`.
    pub fn frobenius(&self) -> FieldElement {
        match &self.repr {
            Repr::Prime(_) => self.clone(),
            Repr::Ext(_) => self.pow(self.field.p as u64),
            Repr::Rat(f) => self.with_repr(Repr::Rat(f.frobenius())),
            Repr::Series(s) => self.with_repr(Repr::Series(s.frobenius())),
        }
    }

    /// `a^{p^k}`.
    pub fn frobenius_pow(&self, k: usize) -> FieldElement {
        let mut x = self.clone();
        if let Some(n) = self.field.degree() {
            // Frobenius has order n on F_{p^n}
            for _ in 0..k % n {
                x = x.frobenius();
            }
            return x;
        }
        for _ in 0..k {
            x = x.frobenius();
        }
        x
    }

    /// The p-th root when it exists in the field. Finite kernels always have
    /// one, `a^{p^{n-1}}`.
    pub fn pth_root(&self) -> Option<FieldElement> {
        match &self.repr {
            Repr::Prime(_) => Some(self.clone()),
            Repr::Ext(_) => {
                let n = self.field.degree().unwrap();
                Some(self.frobenius_pow(n - 1))
            }
            Repr::Rat(f) => f.pth_root().map(|r| self.with_repr(Repr::Rat(r))),
            Repr::Series(s) => s.pth_root().map(|r| self.with_repr(Repr::Series(r))),
        }
    }

    /// Embeds an element of a prime field into another field of the same
    /// characteristic; identity when the fields already agree.
    pub fn embed(&self, target: &Field) -> Result<FieldElement> {
        if self.field.compatible(target) {
            return Ok(FieldElement { field: target.clone(), repr: self.repr.clone() });
        }
        match &self.repr {
            Repr::Prime(c) if target.p == self.field.p => Ok(Self::from_int(target, *c as i64)),
            _ => Err(mismatch(&self.field, target)),
        }
    }

    /// All elements of a finite field, in index order.
    pub fn enumerate(field: &Field) -> Result<impl Iterator<Item = FieldElement> + '_> {
        let order = field.order().ok_or_else(|| Error::InfiniteField(field.to_string()))?;
        Ok((0..order).map(move |i| Self::from_index(field, i).unwrap()))
    }

    /// A random element. For F_p(t) numerator and denominator have degree at
    /// most `degree_bound`; for series the support lies in
    /// `[-degree_bound, degree_bound]`.
    pub fn random<R: Rng + ?Sized>(field: &Field, rng: &mut R, degree_bound: usize) -> FieldElement {
        let p = field.p;
        let mut poly = |len: usize| FpPoly::new(p, (0..len).map(|_| rng.gen_range(0..p)).collect());
        let repr = match &field.kind {
            FieldKind::Prime => Repr::Prime(poly(1).coeff(0)),
            FieldKind::Extension { modulus } => {
                let n = modulus.deg();
                let mut v = poly(n).coeffs().to_vec();
                v.resize(n, 0);
                Repr::Ext(v)
            }
            FieldKind::RationalFunction => {
                let num = poly(degree_bound + 1);
                let mut den = poly(degree_bound + 1);
                if den.is_zero() {
                    den = FpPoly::one(p);
                }
                Repr::Rat(RatFn::new(num, den).unwrap())
            }
            FieldKind::Laurent { .. } => {
                let d = degree_bound as i64;
                let coeffs = poly(2 * degree_bound + 1);
                Repr::Series(LaurentSeries::from_terms(
                    p,
                    1,
                    coeffs.coeffs().iter().enumerate().map(|(k, &c)| (k as i64 - d, c)),
                    None,
                ))
            }
        };
        FieldElement { field: field.clone(), repr }
    }

    /// Display with a compound value wrapped in parentheses, for use as a
    /// coefficient.
    pub fn fmt_coeff(&self) -> String {
        let s = self.to_string();
        let compound = s.contains('+') || s.contains('/') || s.contains(' ') || (s.starts_with('-') && s.len() > 1);
        if compound {
            format!("({s})")
        } else {
            s
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Prime(c) => write!(f, "{c}"),
            Repr::Ext(v) => f.write_str(&FpPoly::new(self.field.p, v.clone()).fmt_var("a")),
            Repr::Rat(r) => write!(f, "{r}"),
            Repr::Series(s) => write!(f, "{s}"),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.field)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;

            /// Panics on descriptor mismatch or division by zero; use
            /// [`FieldElement::arith`] for the checked form.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                match self.arith(rhs, $op) {
                    Ok(x) => x,
                    Err(e) => panic!("{e}"),
                }
            }
        }

        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);
binop!(Div, div, ArithOp::Div);

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        FieldElement::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        FieldDescriptor::extension(2, 2).unwrap()
    }

    #[test]
    fn f4_arithmetic() {
        let f = f4();
        let w = FieldElement::generator(&f).unwrap();
        assert_eq!(&w * &w, &w + &FieldElement::one(&f));
        assert_eq!(w.frobenius(), &w + &FieldElement::one(&f));
        assert_eq!(w.pth_root().unwrap(), &w + &FieldElement::one(&f));
        assert_eq!(f.to_string(), "fq:2^2:mod=a^2+a+1");
    }

    #[test]
    fn prime_field_cases() {
        let f3 = FieldDescriptor::prime(3).unwrap();
        let two = FieldElement::from_int(&f3, 2);
        assert_eq!(&two * &two, FieldElement::one(&f3));
        assert_eq!(two.frobenius(), two);
    }

    #[test]
    fn ratfn_cases() {
        let k = FieldDescriptor::rational_function(2).unwrap();
        let t = FieldElement::generator(&k).unwrap();
        let one = FieldElement::one(&k);
        let sum = &(&one / &t) + &(&one / &(&t + &one));
        assert_eq!(sum.to_string(), "1/(t^2+t)");
        assert_eq!(t.frobenius(), &t * &t);
        assert_eq!((&t * &t).pth_root(), Some(t.clone()));
        assert_eq!(t.pth_root(), None);
    }

    #[test]
    fn enumeration() {
        let f = f4();
        let all: Vec<String> = FieldElement::enumerate(&f).unwrap().map(|x| x.to_string()).collect();
        assert_eq!(all, vec!["0", "1", "a", "a+1"]);
        let f27 = FieldDescriptor::extension(3, 3).unwrap();
        assert_eq!(FieldElement::enumerate(&f27).unwrap().count(), 27);
        let k = FieldDescriptor::rational_function(2).unwrap();
        assert!(matches!(FieldElement::enumerate(&k), Err(Error::InfiniteField(_))));
    }

    #[test]
    fn descriptor_checks() {
        assert!(FieldDescriptor::prime(4).is_err());
        assert!(FieldDescriptor::with_modulus(FpPoly::new(2, vec![1, 0, 1])).is_err());
        assert!(FieldDescriptor::laurent(2, 3, 10).is_err());
        let f2 = FieldDescriptor::prime(2).unwrap();
        let f3 = FieldDescriptor::prime(3).unwrap();
        let r = FieldElement::one(&f2).arith(&FieldElement::one(&f3), ArithOp::Add);
        assert!(matches!(r, Err(Error::DescriptorMismatch { .. })));
        let r = FieldElement::one(&f2).arith(&FieldElement::zero(&f2), ArithOp::Div);
        assert_eq!(r, Err(Error::DivisionByZero));
    }
}
