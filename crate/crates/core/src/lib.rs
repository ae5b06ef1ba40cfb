//! Exact arithmetic in characteristic p: additive polynomials, the skew
//! ring K[phi], Artin-Schreier tools over finite fields, Frobenius-closed
//! bases of F_q(x), and truncated Laurent series.

pub mod addpoly;
pub mod degree;
pub mod error;
pub mod fields;
pub mod funcfield;
pub mod galois_as;
pub mod linalg;
pub mod skew;
pub mod syntax;
pub mod valued;

pub use degree::Degree;
pub use error::{Error, Result};
pub use fields::{Field, FieldDescriptor, FieldElement};
