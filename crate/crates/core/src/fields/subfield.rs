//! Subfields of a finite field, realized inside the ambient field.

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};

use super::{Field, FieldElement, FieldKind};

/// The unique subfield of degree `degree` over F_p of a finite field L,
/// i.e. the fixed field of `x -> x^{p^degree}`.
#[derive(Clone, Debug)]
pub struct Subfield {
    ambient: Field,
    degree: usize,
    /// Image in L of the generator of a separately described K, when K was
    /// given by its own descriptor.
    source: Option<(Field, FieldElement)>,
}

impl Subfield {
    pub fn of_degree(ambient: &Field, degree: usize) -> Result<Subfield> {
        let n = ambient.degree().ok_or_else(|| Error::NotFinite(ambient.to_string()))?;
        if degree == 0 || n % degree != 0 {
            return Err(Error::NotASubfield(format!("degree {degree}"), ambient.to_string()));
        }
        Ok(Subfield { ambient: ambient.clone(), degree, source: None })
    }

    pub fn prime(ambient: &Field) -> Result<Subfield> {
        Self::of_degree(ambient, 1)
    }

    /// The copy of the finite field `k` inside `ambient`. When `k` is an
    /// extension field its generator is sent to the least root (in index
    /// order) of its modulus.
    pub fn from_field(ambient: &Field, k: &Field) -> Result<Subfield> {
        let not_sub = || Error::NotASubfield(k.to_string(), ambient.to_string());
        if k.p() != ambient.p() {
            return Err(not_sub());
        }
        let d = k.degree().ok_or_else(|| Error::NotFinite(k.to_string()))?;
        if k.compatible(ambient) {
            return Self::of_degree(ambient, d);
        }
        let mut sub = Self::of_degree(ambient, d).map_err(|_| not_sub())?;
        if let FieldKind::Extension { modulus } = k.kind() {
            let root = FieldElement::enumerate(ambient)?
                .find(|x| {
                    let mut acc = FieldElement::zero(ambient);
                    for &c in modulus.coeffs().iter().rev() {
                        acc = &(&acc * x) + &FieldElement::from_int(ambient, c as i64);
                    }
                    acc.is_zero()
                })
                .ok_or_else(not_sub)?;
            sub.source = Some((k.clone(), root));
        }
        Ok(sub)
    }

    pub fn ambient(&self) -> &Field {
        &self.ambient
    }

    /// Degree of K over F_p.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Degree of the ambient field over K.
    pub fn index(&self) -> usize {
        self.ambient.degree().unwrap() / self.degree
    }

    pub fn order(&self) -> u128 {
        (self.ambient.p() as u128).pow(self.degree as u32)
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        x.field().compatible(&self.ambient) && x.frobenius_pow(self.degree) == *x
    }

    /// Maps an element into the ambient field. Elements already in the
    /// ambient field must lie in K; elements of a separately described K go
    /// through the recorded generator image.
    pub fn embed(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.field().compatible(&self.ambient) {
            return if self.contains(x) {
                Ok(x.clone())
            } else {
                Err(Error::NotASubfield(x.to_string(), format!("degree {} subfield", self.degree)))
            };
        }
        match &self.source {
            Some((k, root)) if x.field().compatible(k) => {
                let coords = x.coords().unwrap();
                let mut acc = FieldElement::zero(&self.ambient);
                for &c in coords.iter().rev() {
                    acc = &(&acc * root) + &FieldElement::from_int(&self.ambient, c as i64);
                }
                Ok(acc)
            }
            _ => x.embed(&self.ambient),
        }
    }

    /// An F_p-basis of K, as coordinate vectors in the ambient power basis,
    /// in reduced echelon form.
    pub fn basis_coords(&self) -> Vec<Vec<u32>> {
        let n = self.ambient.degree().unwrap();
        let p = self.ambient.p();
        if self.degree == n {
            return (0..n)
                .map(|i| {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    v
                })
                .collect();
        }
        let columns: Vec<Vec<u32>> = (0..n)
            .map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                let x = FieldElement::from_coords(&self.ambient, &e).unwrap();
                (&x.frobenius_pow(self.degree) - &x).coords().unwrap()
            })
            .collect();
        let mut kernel = Matrix::from_columns(p, n, &columns).kernel();
        let mut m = Matrix::from_rows(p, n, &kernel);
        m.rref();
        kernel = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        kernel
    }

    pub fn basis(&self) -> Vec<FieldElement> {
        self.basis_coords().iter().map(|v| FieldElement::from_coords(&self.ambient, v).unwrap()).collect()
    }

    /// All elements of K, sorted by their index in the ambient field.
    pub fn elements(&self) -> Vec<FieldElement> {
        let n = self.ambient.degree().unwrap();
        let mut all: Vec<FieldElement> = linalg::span(self.ambient.p(), &self.basis_coords(), n)
            .iter()
            .map(|v| FieldElement::from_coords(&self.ambient, v).unwrap())
            .collect();
        all.sort_by_key(|x| x.index());
        all
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FieldDescriptor;

    #[test]
    fn subfields_of_f16() {
        let f16 = FieldDescriptor::extension(2, 4).unwrap();
        let f4 = Subfield::of_degree(&f16, 2).unwrap();
        let els = f4.elements();
        assert_eq!(els.len(), 4);
        assert!(els.iter().all(|x| f4.contains(x)));
        assert!(Subfield::of_degree(&f16, 3).is_err());
        let sep = FieldDescriptor::extension(2, 2).unwrap();
        let k = Subfield::from_field(&f16, &sep).unwrap();
        let w = FieldElement::generator(&sep).unwrap();
        let img = k.embed(&w).unwrap();
        assert_eq!(&(&img * &img) + &img, FieldElement::one(&f16));
    }
}
