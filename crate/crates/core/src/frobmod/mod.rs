//! Graded Frobenius characteristics of the modules attached to
//! `B_{n,n−1}`: coinvariants, superspace quotients, positroids and the
//! derangement identities at `q = −1`.

mod graded;
mod positroid;
mod reiner_webb;
mod tbinom;

pub use graded::{coinvariant_grfrob, hrs_grfrob, hrs_superspace, superspace_grfrob, HrsResult, UndefinedTerms};
pub use positroid::{
    act_on_vector, positroid_act, positroid_character, positroid_enumerate, positroid_frobenius, Positroid,
    SignedVector,
};
pub use reiner_webb::{derangement_qsym_check, reiner_webb};
pub use tbinom::{t_binomial, TPoly};
