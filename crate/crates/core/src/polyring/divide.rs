use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::Zero;

use super::poly::{Monomial, MultiPoly};
use crate::error::{Error, Result};

/// Lexicographic long division that succeeds only with a zero remainder.
pub(super) fn exact_divide(p: &MultiPoly, d: &MultiPoly) -> Result<MultiPoly> {
    let (lead_m, lead_c) = d.leading().ok_or(Error::InexactDivision)?;
    let lead_m = lead_m.clone();
    let lead_c = lead_c.clone();
    let tail: Vec<(Monomial, num_bigint::BigInt)> = d
        .terms()
        .iter()
        .filter(|(m, _)| **m != lead_m)
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();

    let mut rem: BTreeMap<Monomial, num_bigint::BigInt> = p.terms().clone();
    let mut quot = MultiPoly::zero(p.alphabets());
    while let Some((m, c)) = rem.pop_last() {
        let qm = m.checked_div_pub(&lead_m).ok_or(Error::InexactDivision)?;
        let (qc, r) = c.div_rem(&lead_c);
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        for (tm, tc) in &tail {
            let delta = &qc * tc;
            match rem.entry(qm.mul_pub(tm)) {
                Entry::Vacant(v) => {
                    v.insert(-delta);
                }
                Entry::Occupied(mut o) => {
                    *o.get_mut() -= delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        quot.add_term(qm, qc);
    }
    Ok(quot)
}
