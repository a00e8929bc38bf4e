//! Schur expansions of `∏(1 + x_i + x_j)`, reverse flagged fillings and
//! the lattice paths that count them.

mod det;
mod expansion;
mod fillings;
mod paths;

pub use det::{binomial_det, lascoux_det, normalized_lascoux_det};
pub use expansion::{
    asm_count, f_sequence, f_sequence_by_fillings, lascoux_sym_expansion, lascoux_wedge_expansion, sym_product,
    wedge_product,
};
pub use fillings::{rff_enumerate, rff_enumerate_flagged, RFFilling};
pub use paths::{gv_enumerate, gv_from_filling, gv_to_filling, PathFamily, Step};
