#![allow(dead_code)]

use ore_core::fields::{FieldKind, FpPoly, RatFn};
use ore_core::skew::SkewPolynomial;
use ore_core::valued::LaurentSeries;
use ore_core::{Field, FieldDescriptor, FieldElement};
use proptest::prelude::*;

pub fn fq(p: u32, n: usize) -> Field {
    FieldDescriptor::extension(p, n).unwrap()
}

pub fn ratfn(p: u32) -> Field {
    FieldDescriptor::rational_function(p).unwrap()
}

pub fn laurent(p: u32) -> Field {
    FieldDescriptor::laurent(p, 1, 40).unwrap()
}

pub fn all(field: &Field) -> Vec<FieldElement> {
    FieldElement::enumerate(field).unwrap().collect()
}

pub fn fp_poly(p: u32, max_len: usize) -> impl Strategy<Value = FpPoly> {
    prop::collection::vec(0..p, 0..=max_len).prop_map(move |c| FpPoly::new(p, c))
}

pub fn nonzero_fp_poly(p: u32, max_len: usize) -> impl Strategy<Value = FpPoly> {
    fp_poly(p, max_len).prop_filter("nonzero", |f| !f.is_zero())
}

/// Exact series with support in `[lo, lo + len)`.
pub fn series(p: u32, lo: std::ops::Range<i64>, max_len: usize) -> impl Strategy<Value = LaurentSeries> {
    (lo, prop::collection::vec(0..p, 0..=max_len)).prop_map(move |(lo, c)| {
        LaurentSeries::from_terms(p, 1, c.into_iter().enumerate().map(|(i, x)| (lo + i as i64, x)), None)
    })
}

pub fn element(field: &Field) -> BoxedStrategy<FieldElement> {
    let f = field.clone();
    let p = field.p();
    match field.kind() {
        FieldKind::Prime | FieldKind::Extension { .. } => {
            let order = field.order().unwrap();
            (0..order).prop_map(move |i| FieldElement::from_index(&f, i).unwrap()).boxed()
        }
        FieldKind::RationalFunction => (fp_poly(p, 4), nonzero_fp_poly(p, 4))
            .prop_map(move |(n, d)| FieldElement::from_ratfn(&f, RatFn::new(n, d).unwrap()).unwrap())
            .boxed(),
        FieldKind::Laurent { .. } => {
            series(p, -4..4, 8).prop_map(move |s| FieldElement::from_series(&f, s).unwrap()).boxed()
        }
    }
}

pub fn nonzero(field: &Field) -> BoxedStrategy<FieldElement> {
    element(field).prop_filter("nonzero", |x| !x.is_zero()).boxed()
}

pub fn skew(field: &Field, max_deg: usize) -> BoxedStrategy<SkewPolynomial> {
    let f = field.clone();
    prop::collection::vec(element(field), 0..=max_deg + 1)
        .prop_map(move |c| SkewPolynomial::new(&f, c).unwrap())
        .boxed()
}

pub fn nonzero_skew(field: &Field, max_deg: usize) -> BoxedStrategy<SkewPolynomial> {
    skew(field, max_deg).prop_filter("nonzero", |s| !s.is_zero()).boxed()
}
