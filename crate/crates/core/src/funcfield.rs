//! A Frobenius-closed basis of the rational function field F_p(x) over F_p.
//!
//! Basis elements are `1`, the monomials `x^n`, and for each monic
//! irreducible `P` of degree `d` the fractions `x^{(i-1) p^nu} / P^n` with
//! `n = p^nu m`, `p` not dividing `m`, `1 <= i <= d`. The p-th power of a
//! basis element is again a basis element (`nu -> nu + 1`).
//!
//! The function variable is written `t`, matching the `ratfn` kernel.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{fp, fppoly, FieldDescriptor, FieldElement, FpPoly, RatFn};
use crate::linalg::Matrix;
use crate::skew::SkewPolynomial;

/// Default degree bound for trial-division factoring of denominators.
pub const DEFAULT_PLACE_BOUND: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinity,
    /// A monic irreducible polynomial.
    Finite(FpPoly),
}

impl Place {
    pub fn finite(poly: FpPoly) -> Result<Place> {
        if !poly.is_monic() || !poly.is_irreducible() {
            return Err(Error::NotIrreducible(poly.to_string()));
        }
        Ok(Place::Finite(poly))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Infinity => 1,
            Place::Finite(poly) => poly.deg(),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => f.write_str("inf"),
            Place::Finite(poly) => write!(f, "{poly}"),
        }
    }
}

/// Index into the Frobenius-closed basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisIndex {
    One,
    /// `x^{p^nu m}`.
    Monomial {
        nu: u32,
        m: u64,
    },
    /// `x^{(slot-1) p^nu} / P^{p^nu m}`.
    Principal {
        place: FpPoly,
        slot: usize,
        nu: u32,
        m: u64,
    },
}

impl BasisIndex {
    fn valid(&self, p: u32) -> bool {
        match self {
            BasisIndex::One => true,
            BasisIndex::Monomial { m, .. } => *m >= 1 && m % p as u64 != 0,
            BasisIndex::Principal { place, slot, m, .. } => {
                *m >= 1 && m % p as u64 != 0 && *slot >= 1 && *slot <= place.deg()
            }
        }
    }

    pub fn nu(&self) -> u32 {
        match self {
            BasisIndex::One => 0,
            BasisIndex::Monomial { nu, .. } | BasisIndex::Principal { nu, .. } => *nu,
        }
    }

    /// The same index at Frobenius level `nu`.
    pub fn at_level(&self, level: u32) -> BasisIndex {
        match self {
            BasisIndex::One => BasisIndex::One,
            BasisIndex::Monomial { m, .. } => BasisIndex::Monomial { nu: level, m: *m },
            BasisIndex::Principal { place, slot, m, .. } => {
                BasisIndex::Principal { place: place.clone(), slot: *slot, nu: level, m: *m }
            }
        }
    }

    pub fn place(&self) -> Place {
        match self {
            BasisIndex::Principal { place, .. } => Place::Finite(place.clone()),
            _ => Place::Infinity,
        }
    }

    /// The basis element as a rational function.
    pub fn element(&self, p: u32) -> RatFn {
        match self {
            BasisIndex::One => RatFn::one(p),
            BasisIndex::Monomial { nu, m } => {
                RatFn::from_poly(FpPoly::monomial(p, 1, (p as usize).pow(*nu) * *m as usize))
            }
            BasisIndex::Principal { place, slot, nu, m } => {
                let q = (p as usize).pow(*nu);
                let num = FpPoly::monomial(p, 1, (slot - 1) * q);
                RatFn::new(num, place.pow((q as u64) * m)).unwrap()
            }
        }
    }

    /// Fields for the `P=... i=... nu=... m=...` line format.
    pub fn parts(&self) -> (String, usize, u32, u64) {
        match self {
            BasisIndex::One => ("inf".into(), 1, 0, 0),
            BasisIndex::Monomial { nu, m } => ("inf".into(), 1, *nu, *m),
            BasisIndex::Principal { place, slot, nu, m } => (place.to_string(), *slot, *nu, *m),
        }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (place, i, nu, m) = self.parts();
        write!(f, "P={place} i={i} nu={nu} m={m}")
    }
}

/// The index of the p-th power of a basis element.
pub fn index_pth_power(b: &BasisIndex) -> BasisIndex {
    match b {
        BasisIndex::One => BasisIndex::One,
        _ => b.at_level(b.nu() + 1),
    }
}

/// Coordinates in the Frobenius-closed basis; only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    p: u32,
    terms: BTreeMap<BasisIndex, u32>,
}

impl Decomposition {
    pub fn new(p: u32) -> Self {
        Decomposition { p, terms: BTreeMap::new() }
    }

    pub fn from_terms(p: u32, terms: impl IntoIterator<Item = (BasisIndex, u32)>) -> Result<Self> {
        let mut d = Decomposition::new(p);
        for (b, c) in terms {
            if !b.valid(p) {
                return Err(Error::InvalidDescriptor(format!("invalid basis index {b}")));
            }
            d.add(b, c);
        }
        Ok(d)
    }

    fn add(&mut self, b: BasisIndex, c: u32) {
        let entry = self.terms.entry(b.clone()).or_insert(0);
        *entry = fp::add(*entry, c % self.p, self.p);
        if *entry == 0 {
            self.terms.remove(&b);
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn terms(&self) -> &BTreeMap<BasisIndex, u32> {
        &self.terms
    }

    pub fn get(&self, b: &BasisIndex) -> u32 {
        self.terms.get(b).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }
}

/// The infinite place and every monic irreducible of degree at most `d`.
pub fn places_up_to(p: u32, d: usize) -> Vec<Place> {
    let mut out = vec![Place::Infinity];
    for k in 1..=d {
        out.extend(fppoly::monic_polys(p, k).filter(|f| f.is_irreducible()).map(Place::Finite));
    }
    out
}

/// Factors a monic polynomial into monic irreducibles of degree at most
/// `bound` by trial division in increasing degree.
pub fn factor_bounded(f: &FpPoly, bound: usize) -> Result<BTreeMap<FpPoly, u32>> {
    let p = f.p();
    let mut rest = f.monic();
    let mut out = BTreeMap::new();
    let mut k = 1;
    while rest.deg() >= 2 * k && k <= bound {
        for g in fppoly::monic_polys(p, k) {
            let mut e = 0;
            loop {
                let (q, r) = rest.divrem(&g);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            if e > 0 {
                out.insert(g, e);
            }
        }
        k += 1;
    }
    if rest.deg() > 0 {
        if rest.deg() > bound {
            return Err(Error::UnfactoredDenominator(rest.fmt_var("t")));
        }
        *out.entry(rest).or_insert(0) += 1;
    }
    Ok(out)
}

/// `f = poly + sum_P sum_n parts[P][n-1] / P^n` with `deg parts[P][n-1] < deg P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub poly: FpPoly,
    pub parts: BTreeMap<FpPoly, Vec<FpPoly>>,
}

impl PartialFractions {
    pub fn recompose(&self) -> RatFn {
        let mut acc = RatFn::from_poly(self.poly.clone());
        for (place, rs) in &self.parts {
            for (k, r) in rs.iter().enumerate() {
                acc = acc.add(&RatFn::new(r.clone(), place.pow(k as u64 + 1)).unwrap());
            }
        }
        acc
    }
}

pub fn partial_fractions(f: &RatFn, bound: usize) -> Result<PartialFractions> {
    let (poly, rem) = f.num().divrem(f.den());
    let mut parts = BTreeMap::new();
    if rem.is_zero() {
        return Ok(PartialFractions { poly, parts });
    }
    let den = f.den();
    for (place, e) in factor_bounded(den, bound)? {
        let pe = place.pow(e as u64);
        let cofactor = den.divrem(&pe).0;
        let mut a = rem.mul(&cofactor.inv_mod(&pe).unwrap()).rem(&pe);
        // P-adic digits a = sum_k a_k P^k give a / P^e = sum_k a_k / P^{e-k}
        let mut digits = Vec::with_capacity(e as usize);
        for _ in 0..e {
            let (q, r) = a.divrem(&place);
            digits.push(r);
            a = q;
        }
        digits.reverse();
        parts.insert(place, digits);
    }
    Ok(PartialFractions { poly, parts })
}

fn split_p_power(mut n: u64, p: u32) -> (u32, u64) {
    let mut nu = 0;
    while n.is_multiple_of(p as u64) {
        n /= p as u64;
        nu += 1;
    }
    (nu, n)
}

/// Coordinates of `f` in the Frobenius-closed basis.
///
/// Each place is peeled from its highest pole order `n = p^nu m` down: the
/// residue of the numerator modulo `P` is expanded in `x^{(i-1)p^nu} mod P`,
/// the matching proper fractions are subtracted, and the order drops.
pub fn frob_decompose(f: &RatFn, bound: usize) -> Result<Decomposition> {
    let p = f.p();
    let pf = partial_fractions(f, bound)?;
    let mut out = Decomposition::new(p);
    for (n, &c) in pf.poly.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let b = if n == 0 {
            BasisIndex::One
        } else {
            let (nu, m) = split_p_power(n as u64, p);
            BasisIndex::Monomial { nu, m }
        };
        out.add(b, c);
    }
    for (place, digits) in &pf.parts {
        let d = place.deg();
        // numerator over place^order
        let mut order = digits.len() as u64;
        let mut num = FpPoly::zero(p);
        for (k, r) in digits.iter().enumerate() {
            num = num.add(&r.mul(&place.pow((digits.len() - 1 - k) as u64)));
        }
        while order > 0 {
            let residue = num.rem(place);
            if residue.is_zero() {
                num = num.divrem(place).0;
                order -= 1;
                continue;
            }
            let (nu, m) = split_p_power(order, p);
            let q = (p as usize).pow(nu);
            let powers: Vec<FpPoly> = (0..d).map(|i| FpPoly::monomial(p, 1, i * q)).collect();
            let columns: Vec<Vec<u32>> = powers.iter().map(|x| x.rem(place).coeffs().to_vec()).collect();
            let mut rhs = residue.coeffs().to_vec();
            rhs.resize(d, 0);
            let coeffs = Matrix::from_columns(p, d, &columns)
                .solve(&rhs)
                .expect("Frobenius powers of the power basis span the residue field");
            for (i, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    out.add(BasisIndex::Principal { place: place.clone(), slot: i + 1, nu, m }, c);
                    num = num.sub(&powers[i].scale(c));
                }
            }
            debug_assert!(num.rem(place).is_zero());
        }
        debug_assert!(num.is_zero());
    }
    Ok(out)
}

pub fn recompose(d: &Decomposition) -> RatFn {
    let p = d.p;
    d.terms
        .iter()
        .fold(RatFn::zero(p), |acc, (b, &c)| acc.add(&b.element(p).mul(&RatFn::from_poly(FpPoly::constant(p, c)))))
}

/// `f = constant + sum_b A_b(b)` with `b` ranging over level-0 indices and
/// `A_b in F_p[phi]` collecting the coefficients of the levels above `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPhiDecomposition {
    pub constant: u32,
    pub parts: BTreeMap<BasisIndex, SkewPolynomial>,
}

impl KPhiDecomposition {
    pub fn recompose(&self, p: u32) -> Result<RatFn> {
        let k = FieldDescriptor::rational_function(p)?;
        let mut acc = FieldElement::from_int(&k, self.constant as i64);
        for (b, a) in &self.parts {
            let x = FieldElement::from_ratfn(&k, b.element(p))?;
            acc = acc.try_add(&a.apply(&x)?)?;
        }
        Ok(acc.as_ratfn().unwrap().clone())
    }
}

pub fn kphi_decompose(f: &RatFn, bound: usize) -> Result<KPhiDecomposition> {
    let p = f.p();
    let fp_field = FieldDescriptor::prime(p)?;
    let d = frob_decompose(f, bound)?;
    let mut constant = 0;
    let mut grouped: BTreeMap<BasisIndex, Vec<FieldElement>> = BTreeMap::new();
    for (b, &c) in d.terms() {
        if *b == BasisIndex::One {
            constant = c;
            continue;
        }
        let level = b.nu() as usize;
        let coeffs = grouped.entry(b.at_level(0)).or_default();
        if coeffs.len() <= level {
            coeffs.resize(level + 1, FieldElement::zero(&fp_field));
        }
        coeffs[level] = FieldElement::from_int(&fp_field, c as i64);
    }
    let parts = grouped
        .into_iter()
        .map(|(b, cs)| Ok((b, SkewPolynomial::new(&fp_field, cs)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(KPhiDecomposition { constant, parts })
}
