use num_bigint::BigInt;

use crate::combinat::{derangements, syt_enumerate};
use crate::error::{Error, Result};
use crate::polyring::{Alphabets, MultiPoly};
use crate::schurbasis::{e_h_product, restrict_to_vars, SchurVector};
use crate::symexpand::fundamental_qsym;

/// `Σ_λ a_λ s_λ` where `a_λ` counts standard tableaux of shape `λ` whose
/// smallest ascent is even, with `n` counted as an ascent. Needs `n ≥ 2`.
pub fn reiner_webb(n: usize) -> Result<SchurVector> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("reiner_webb needs n >= 2, got {n}")));
    }
    let mut v = SchurVector::zero();
    for st in syt_enumerate(n) {
        if st.tableau.smallest_ascent() % 2 == 0 {
            v.add_term(st.shape().clone(), BigInt::from(1));
        }
    }
    Ok(v)
}

/// `Σ_{w ∈ D_n} F_{D(w)}(X_n) = B_{n,n−1}(X_n; −1)`, with the right side
/// taken from the tableau formula when `n ≥ 2` and from
/// `Σ_j (−1)^j e_j h_1^{n−j}` otherwise.
pub fn derangement_qsym_check(n: usize) -> bool {
    let lhs = derangements(n)
        .iter()
        .map(|w| fundamental_qsym(&w.descent_set(), n))
        .fold(MultiPoly::zero(Alphabets::single(n)), |acc, f| &acc + &f);
    let rhs = match reiner_webb(n) {
        Ok(v) => v,
        Err(_) => (0..=n).fold(SchurVector::zero(), |acc, j| {
            let term = e_h_product(j, n - j);
            if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            }
        }),
    };
    lhs == restrict_to_vars(&rhs, n)
}
