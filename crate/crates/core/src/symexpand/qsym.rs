use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::polyring::{Alphabets, Monomial, MultiPoly};

/// Gessel's fundamental quasisymmetric polynomial `F_S` of degree `n` in
/// `n` variables.
pub fn fundamental_qsym(s: &BTreeSet<usize>, n: usize) -> MultiPoly {
    fundamental_qsym_in(s, n, n)
}

/// `F_S` of degree `d` in `vars` variables: the sum of `x_{i_1}⋯x_{i_d}`
/// over `1 ≤ i_1 ≤ … ≤ i_d ≤ vars` with `i_j < i_{j+1}` for `j ∈ S`.
pub fn fundamental_qsym_in(s: &BTreeSet<usize>, d: usize, vars: usize) -> MultiPoly {
    let alph = Alphabets::single(vars);
    let mut out = MultiPoly::zero(alph);
    if d == 0 {
        return MultiPoly::one(alph);
    }
    let mut exps = vec![0u16; vars];
    fill(s, d, vars, 1, 0, &mut exps, &mut out);
    out
}

fn fill(s: &BTreeSet<usize>, d: usize, vars: usize, pos: usize, prev: usize, exps: &mut Vec<u16>, out: &mut MultiPoly) {
    if pos > d {
        out.add_term(Monomial::from_exps(0, exps), BigInt::from(1));
        return;
    }
    let lo = if pos == 1 {
        0
    } else if s.contains(&(pos - 1)) {
        prev + 1
    } else {
        prev
    };
    // leave room for the strict steps still ahead
    let strict_ahead = s.range(pos..d).count();
    for i in lo..vars.saturating_sub(strict_ahead) {
        exps[i] += 1;
        fill(s, d, vars, pos + 1, i, exps, out);
        exps[i] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{derangements, Partition};
    use crate::symexpand::schur_poly;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn extremes() {
        let a = Alphabets::single(3);
        let e3 = &(&MultiPoly::x(a, 1) * &MultiPoly::x(a, 2)) * &MultiPoly::x(a, 3);
        assert_eq!(fundamental_qsym(&set(&[1, 2]), 3), e3);
        assert_eq!(
            fundamental_qsym(&set(&[]), 3),
            *schur_poly(&Partition::row(3), 3)
        );
        assert_eq!(fundamental_qsym(&set(&[1]), 2), *schur_poly(&Partition::column(2), 2));
    }

    #[test]
    fn derangements_of_three() {
        let total = derangements(3)
            .iter()
            .map(|w| fundamental_qsym(&w.descent_set(), 3))
            .fold(MultiPoly::zero(Alphabets::single(3)), |a, b| &a + &b);
        assert_eq!(total, *schur_poly(&Partition::from_parts(&[2, 1]), 3));
    }

    #[test]
    fn term_count_matches_brute_force() {
        // weakly increasing words with forced strict steps, counted directly
        for d in 1..=4usize {
            for mask in 0..(1u32 << (d - 1)) {
                let s: BTreeSet<usize> = (1..d).filter(|j| mask >> (j - 1) & 1 == 1).collect();
                for vars in 1..=4usize {
                    let mut count = 0u64;
                    let total = vars.pow(d as u32);
                    for code in 0..total {
                        let mut c = code;
                        let word: Vec<usize> = (0..d).map(|_| { let v = c % vars; c /= vars; v }).collect();
                        let ok = (1..d).all(|j| {
                            if s.contains(&j) { word[j - 1] < word[j] } else { word[j - 1] <= word[j] }
                        });
                        if ok {
                            count += 1;
                        }
                    }
                    let f = fundamental_qsym_in(&s, d, vars);
                    assert_eq!(f.evaluate_all_ones(None), BigInt::from(count));
                }
            }
        }
    }
}
