//! Schur polynomials in finitely many variables, the antisymmetrizer, and
//! Schur expansion of symmetric polynomials in one or two alphabets.

mod expand;
mod kostka;
mod qsym;
mod schur;

pub use expand::{
    double_schur_expand, is_symmetric, is_symmetric_in_x, is_symmetric_in_y, schur_coefficients_by_alternant,
    schur_expand, DoubleSchurExpansion, SchurExpansion,
};
pub use kostka::KostkaTable;
pub use qsym::{fundamental_qsym, fundamental_qsym_in};
pub use schur::{antisymmetrize, schur_poly, schur_poly_by_tableaux, vandermonde};
