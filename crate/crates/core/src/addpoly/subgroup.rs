//! Finite additive subgroups and annihilating additive polynomials.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::fields::{FieldElement, Subfield};
use crate::linalg::Matrix;

use super::{classify_additive, AdditivePolynomial, Classification, OrdinaryPolynomial};

/// `prod_{w in W} (X - w)` for a finite additive subgroup `W`.
///
/// A finite nonempty subset closed under addition is a subgroup, so only
/// closure is checked; the first pair whose sum leaves `W` is reported.
pub fn subgroup_to_additive(w: &[FieldElement]) -> Result<AdditivePolynomial> {
    let Some(first) = w.first() else {
        return Err(Error::NotASubgroup { a: "{}".into(), b: "{}".into() });
    };
    let field = first.field().clone();
    let set: HashSet<&FieldElement> = w.iter().collect();
    for a in w {
        for b in w {
            let s = a.try_add(b)?;
            if !set.contains(&s) {
                return Err(Error::NotASubgroup { a: a.to_string(), b: b.to_string() });
            }
        }
    }
    let mut prod = OrdinaryPolynomial::from_ints(&field, &[1]);
    for x in &set {
        let lin = OrdinaryPolynomial::new(&field, vec![x.neg(), FieldElement::one(&field)])?;
        prod = prod.mul(&lin)?;
    }
    match classify_additive(&prod) {
        Classification::Additive(a) => Ok(a),
        Classification::NotAdditive { exponent } => {
            Err(Error::NotASubgroup { a: format!("product has exponent {exponent}"), b: String::new() })
        }
    }
}

/// The monic additive polynomial over `k` of least p-degree vanishing at `b`,
/// read off from the first K-linear dependence among `b, b^p, b^{p^2}, ...`.
/// Coefficients are returned inside the ambient field of `k`.
pub fn minimal_annihilator(b: &FieldElement, k: &Subfield) -> Result<AdditivePolynomial> {
    let field = k.ambient().clone();
    let b = b.embed(&field)?;
    let p = field.p();
    let n = field.degree().unwrap();
    let kappa = k.basis();
    let mut orbit = vec![b.clone()];
    // the orbit spans a K-space of dimension at most [L:K]
    for m in 0..=k.index() {
        let rhs = orbit[m].neg().coords().unwrap();
        let columns: Vec<Vec<u32>> =
            orbit[..m].iter().flat_map(|bi| kappa.iter().map(move |kj| (kj * bi).coords().unwrap())).collect();
        let solution = if m == 0 {
            rhs.iter().all(|&c| c == 0).then(Vec::new)
        } else {
            Matrix::from_columns(p, n, &columns).solve(&rhs)
        };
        if let Some(x) = solution {
            let mut coeffs: Vec<FieldElement> = (0..m)
                .map(|i| {
                    kappa.iter().enumerate().fold(FieldElement::zero(&field), |acc, (j, kj)| {
                        &acc + &(kj * &FieldElement::from_int(&field, x[i * kappa.len() + j] as i64))
                    })
                })
                .collect();
            coeffs.push(FieldElement::one(&field));
            return AdditivePolynomial::new(&field, coeffs);
        }
        let next = orbit[m].frobenius();
        orbit.push(next);
    }
    unreachable!("Frobenius orbit must become K-linearly dependent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FieldDescriptor;

    #[test]
    fn subgroup_products() {
        let f4 = FieldDescriptor::extension(2, 2).unwrap();
        let all: Vec<_> = FieldElement::enumerate(&f4).unwrap().collect();
        assert_eq!(subgroup_to_additive(&all).unwrap().to_string(), "X^4 + X");
        assert_eq!(subgroup_to_additive(&all[..2]).unwrap().to_string(), "X^2 + X");
        assert_eq!(subgroup_to_additive(&all[..1]).unwrap().to_string(), "X");
        assert!(matches!(subgroup_to_additive(&all[1..3]), Err(Error::NotASubgroup { .. })));
    }

    #[test]
    fn annihilators_in_f4() {
        let f4 = FieldDescriptor::extension(2, 2).unwrap();
        let w = FieldElement::generator(&f4).unwrap();
        let prime = Subfield::prime(&f4).unwrap();
        let whole = Subfield::of_degree(&f4, 2).unwrap();
        let one = FieldElement::one(&f4);
        assert_eq!(minimal_annihilator(&one, &prime).unwrap().to_string(), "X^2 + X");
        assert_eq!(minimal_annihilator(&w, &prime).unwrap().to_string(), "X^4 + X");
        let a = minimal_annihilator(&w, &whole).unwrap();
        assert_eq!(a.to_string(), "X^2 + a*X");
        assert!(a.eval(&w).unwrap().is_zero());
        assert_eq!(minimal_annihilator(&FieldElement::zero(&f4), &prime).unwrap().to_string(), "X");
    }
}
