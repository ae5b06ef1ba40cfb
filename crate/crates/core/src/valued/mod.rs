//! Truncated Laurent series over F_p with the t-adic valuation, and solvers
//! for Artin-Schreier type equations over them.

mod extremal;
pub mod series;
mod solve;

pub use extremal::{extremal_search, ExtremalResult, SearchMode, SeriesPPolynomial, Window, DEFAULT_BUDGET};
pub use series::{Exponent, LaurentSeries, Value};
pub use solve::{
    as_root_extension, expected_root_valuation, hensel_as_solve, image_decompose, AsRoot, ImageDecomposition,
};
