//! Exact integer linear algebra and univariate integer polynomials.

mod matrix;
mod poly;

pub use matrix::{
    all_principal_minors, all_principal_minors_with, char_poly, determinant, inertia, is_psd,
    principal_minor, Inertia, IntMatrix,
};
pub use poly::{eval_rational, sturm_is_real_rooted, IntPolynomial, Rational};
