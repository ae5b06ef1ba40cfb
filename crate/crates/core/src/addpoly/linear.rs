//! Additive polynomials as F_p-linear maps on a finite field.

use crate::error::{Error, Result};
use crate::fields::{Field, FieldElement};
use crate::linalg::{self, Matrix};

use super::{AdditivePolynomial, PPolynomial};

/// Root sets of fields up to this size are listed element by element.
pub const EXPLICIT_ROOT_LIMIT: u128 = 729;

/// The matrix of an additive polynomial on F_{p^n} in the power basis:
/// column j holds the coordinates of `A(a^j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizedMap {
    field: Field,
    matrix: Matrix,
}

impl LinearizedMap {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &FieldElement) -> Result<FieldElement> {
        let coords = x.embed(&self.field)?.coords().unwrap();
        FieldElement::from_coords(&self.field, &self.matrix.mul_vec(&coords))
    }

    /// Coordinate vectors spanning the kernel.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        self.matrix.kernel()
    }
}

pub fn linearize(a: &AdditivePolynomial, field: &Field) -> Result<LinearizedMap> {
    let n = field.degree().ok_or_else(|| Error::NotFinite(field.to_string()))?;
    let a = a.embed(field)?;
    let columns = (0..n)
        .map(|j| {
            let mut e = vec![0; n];
            e[j] = 1;
            let basis = FieldElement::from_coords(field, &e)?;
            Ok(a.eval(&basis)?.coords().unwrap())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinearizedMap { field: field.clone(), matrix: Matrix::from_columns(field.p(), n, &columns) })
}

/// Roots of a p-polynomial in a finite field: empty, or a coset of the
/// kernel of the additive part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSet {
    Empty,
    /// All roots, sorted by element index.
    Explicit(Vec<FieldElement>),
    /// `shift + span(basis)`, used for fields larger than [`EXPLICIT_ROOT_LIMIT`].
    Affine {
        shift: FieldElement,
        basis: Vec<FieldElement>,
    },
}

impl RootSet {
    pub fn is_empty(&self) -> bool {
        match self {
            RootSet::Empty => true,
            RootSet::Explicit(v) => v.is_empty(),
            RootSet::Affine { .. } => false,
        }
    }

    pub fn len(&self) -> u128 {
        match self {
            RootSet::Empty => 0,
            RootSet::Explicit(v) => v.len() as u128,
            RootSet::Affine { shift, basis } => (shift.p() as u128).pow(basis.len() as u32),
        }
    }

    /// Every root, sorted by index.
    pub fn elements(&self) -> Vec<FieldElement> {
        match self {
            RootSet::Empty => Vec::new(),
            RootSet::Explicit(v) => v.clone(),
            RootSet::Affine { shift, basis } => {
                let field = shift.field();
                let n = field.degree().unwrap();
                let coords: Vec<Vec<u32>> = basis.iter().map(|b| b.coords().unwrap()).collect();
                let mut all: Vec<FieldElement> = linalg::span(field.p(), &coords, n)
                    .iter()
                    .map(|v| shift + &FieldElement::from_coords(field, v).unwrap())
                    .collect();
                all.sort_by_key(|x| x.index());
                all
            }
        }
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        match self {
            RootSet::Empty => false,
            RootSet::Explicit(v) => v.contains(x),
            RootSet::Affine { shift, basis } => {
                let field = shift.field();
                let n = field.degree().unwrap();
                let Ok(d) = x.try_sub(shift) else { return false };
                let cols: Vec<Vec<u32>> = basis.iter().map(|b| b.coords().unwrap()).collect();
                Matrix::from_columns(field.p(), n, &cols).solve(&d.coords().unwrap()).is_some()
            }
        }
    }
}

/// Solves `A(x) = -c` as an affine F_p-linear system.
pub fn solve_p_polynomial(f: &PPolynomial, field: &Field) -> Result<RootSet> {
    let map = linearize(f.additive(), field)?;
    let rhs = f.constant().embed(field)?.neg().coords().unwrap();
    let Some(x0) = map.matrix.solve(&rhs) else {
        return Ok(RootSet::Empty);
    };
    let shift = FieldElement::from_coords(field, &x0)?;
    let basis = map.kernel().iter().map(|v| FieldElement::from_coords(field, v)).collect::<Result<Vec<_>>>()?;
    let affine = RootSet::Affine { shift, basis };
    if field.order().unwrap() <= EXPLICIT_ROOT_LIMIT {
        Ok(RootSet::Explicit(affine.elements()))
    } else {
        Ok(affine)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FieldDescriptor;

    #[test]
    fn artin_schreier_matrix_on_f4() {
        let f4 = FieldDescriptor::extension(2, 2).unwrap();
        let m = linearize(&AdditivePolynomial::artin_schreier(&f4), &f4).unwrap();
        assert_eq!(m.matrix().column(0), vec![0, 0]);
        assert_eq!(m.matrix().column(1), vec![1, 0]);
        let frob = linearize(&AdditivePolynomial::from_ints(&f4, &[0, 1]), &f4).unwrap();
        assert_eq!(frob.matrix().mul(frob.matrix()), Matrix::identity(2, 2));
    }

    #[test]
    fn solving_over_f4() {
        let f4 = FieldDescriptor::extension(2, 2).unwrap();
        let w = FieldElement::generator(&f4).unwrap();
        let one = FieldElement::one(&f4);
        let wp = AdditivePolynomial::artin_schreier(&f4);
        let roots = solve_p_polynomial(&PPolynomial::new(wp.clone(), one.clone()).unwrap(), &f4).unwrap();
        assert_eq!(roots, RootSet::Explicit(vec![w.clone(), &w + &one]));
        let none = solve_p_polynomial(&PPolynomial::new(wp.clone(), w.clone()).unwrap(), &f4).unwrap();
        assert!(none.is_empty());
        let kernel = solve_p_polynomial(&PPolynomial::new(wp, FieldElement::zero(&f4)).unwrap(), &f4).unwrap();
        assert_eq!(kernel.elements(), vec![FieldElement::zero(&f4), one]);
    }

    #[test]
    fn large_fields_use_affine_form() {
        let f = FieldDescriptor::extension(2, 10).unwrap();
        let wp = AdditivePolynomial::artin_schreier(&f);
        let roots = solve_p_polynomial(&PPolynomial::new(wp, FieldElement::zero(&f)).unwrap(), &f).unwrap();
        assert!(matches!(roots, RootSet::Affine { .. }));
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&FieldElement::one(&f)));
    }
}
