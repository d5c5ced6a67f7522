//! Exact scalars, polynomials and matrices.

pub mod charpoly;
pub mod commpoly;
pub mod field;
pub mod linalg;
pub mod matrix;
pub mod ncpoly;
pub(crate) mod text;
pub mod univariate;
pub mod word;

pub use charpoly::{charpoly, det, det_linear_combination};
pub use commpoly::{CommPoly, Monomial, Vars};
pub use field::{Field, Scalar};
pub use matrix::{Matrix, Ring, ScalarMatrix};
pub use ncpoly::{nc_eval, NCPoly};
pub use word::Word;
