//! Sparse exact multivariate polynomials over one or two alphabets, with an
//! optional formal grading by powers of `q`.

mod det;
mod divide;
mod linear;
mod poly;

pub use det::bareiss_det;
pub use linear::{expand_linear_forms, expand_linear_forms_parallel, LinearForm};
pub use poly::{Alphabets, Monomial, MultiPoly, TermJson};
