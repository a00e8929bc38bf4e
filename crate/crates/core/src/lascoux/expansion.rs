use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use super::det::binomial_det;
use super::fillings::rff_enumerate_flagged;
use crate::combinat::{factorial, partitions_inside, vertical_strip_extensions, Partition};
use crate::polyring::{expand_linear_forms_parallel, Alphabets, LinearForm, MultiPoly};
use crate::schurbasis::SchurVector;

/// `∏_{i<j} (1 + x_i + x_j)`.
pub fn wedge_product(n: usize) -> MultiPoly {
    pair_product(n, false)
}

/// `∏_{i≤j} (1 + x_i + x_j)`.
pub fn sym_product(n: usize) -> MultiPoly {
    pair_product(n, true)
}

fn pair_product(n: usize, diagonal: bool) -> MultiPoly {
    let alph = Alphabets::single(n);
    let mut forms = Vec::new();
    for j in 1..=n {
        for i in 1..=j {
            if i == j && !diagonal {
                continue;
            }
            let mut f = LinearForm::zero(alph).with_constant(1);
            f.x[i - 1] += 1;
            f.x[j - 1] += 1;
            forms.push(f);
        }
    }
    expand_linear_forms_parallel(alph, &forms)
}

/// `r^{(n)}_μ` for every `μ ⊆ δ_{n−1}`, computed as binomial determinants.
fn filling_counts(n: usize) -> Vec<(Partition, BigInt)> {
    partitions_inside(&Partition::staircase(n.saturating_sub(1)))
        .into_par_iter()
        .map(|mu| {
            let r = binomial_det(&mu, n);
            (mu, r)
        })
        .collect()
}

/// `Σ_{μ ⊆ δ_{n−1}} r^{(n)}_μ s_μ`.
pub fn lascoux_wedge_expansion(n: usize) -> SchurVector {
    SchurVector::from_terms(filling_counts(n))
}

/// `Σ_{λ ⊆ δ_n} Σ_μ 2^{|λ/μ|} r^{(n)}_μ s_λ` over `μ ⊆ λ ∩ δ_{n−1}` with
/// `λ/μ` a vertical strip.
pub fn lascoux_sym_expansion(n: usize) -> SchurVector {
    let outer = Partition::staircase(n);
    let mut v = SchurVector::zero();
    for (mu, r) in filling_counts(n) {
        for k in 0..=n {
            let weight = &r << k;
            for lambda in vertical_strip_extensions(&mu, k, &outer) {
                v.add_term(lambda, weight.clone());
            }
        }
    }
    v
}

/// `∏_{k=0}^{n−1} (3k+1)! / (n+k)!`.
pub fn asm_count(n: usize) -> BigInt {
    let num: BigInt = (0..n).map(|k| factorial(3 * k + 1)).product();
    let den: BigInt = (0..n).map(|k| factorial(n + k)).product();
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// Sum of the coefficients of [`lascoux_sym_expansion`].
pub fn f_sequence(n: usize) -> BigInt {
    lascoux_sym_expansion(n).terms().values().sum()
}

/// `Σ_{λ ⊆ δ_n} Σ_T 2^{m_1(T)}` over reverse flagged fillings `T` of shape
/// `λ` whose row `i` is bounded by `n + 1 − i`.
pub fn f_sequence_by_fillings(n: usize) -> BigInt {
    partitions_inside(&Partition::staircase(n))
        .par_iter()
        .map(|lambda| {
            rff_enumerate_flagged(lambda, n + 1)
                .iter()
                .map(|t| BigInt::from(1) << t.ones())
                .sum::<BigInt>()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lascoux::{gv_enumerate, normalized_lascoux_det, rff_enumerate};
    use crate::symexpand::{antisymmetrize, schur_expand};

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v)
    }

    fn expanded(f: &MultiPoly) -> SchurVector {
        schur_expand(f).unwrap().into()
    }

    #[test]
    fn wedge_small() {
        let want = SchurVector::from_terms(
            [(p(&[]), 1), (p(&[1]), 2), (p(&[2]), 1), (p(&[1, 1]), 2), (p(&[2, 1]), 1)]
                .map(|(l, c)| (l, BigInt::from(c))),
        );
        assert_eq!(lascoux_wedge_expansion(3), want);
        assert_eq!(lascoux_wedge_expansion(1), SchurVector::one());
        let total: BigInt = lascoux_wedge_expansion(4).terms().values().sum();
        assert_eq!(total, BigInt::from(42));
    }

    #[test]
    fn sym_small() {
        let want = SchurVector::from_terms([(p(&[]), BigInt::from(1)), (p(&[1]), BigInt::from(2))]);
        assert_eq!(lascoux_sym_expansion(1), want);
        let f: Vec<BigInt> = (1..=5).map(f_sequence).collect();
        assert_eq!(f, [3, 16, 147, 2304, 61347].map(BigInt::from));
    }

    #[test]
    fn both_lines_match_products() {
        for n in 1..=4 {
            assert_eq!(lascoux_wedge_expansion(n), expanded(&wedge_product(n)), "n={n}");
            assert_eq!(lascoux_sym_expansion(n), expanded(&sym_product(n)), "n={n}");
        }
    }

    #[test]
    fn asm_values() {
        let got: Vec<BigInt> = (1..=6).map(asm_count).collect();
        assert_eq!(got, [1, 2, 7, 42, 429, 7436].map(BigInt::from));
        for n in 1..=6 {
            let total: BigInt = lascoux_wedge_expansion(n).terms().values().sum();
            assert_eq!(total, asm_count(n));
        }
    }

    #[test]
    fn filling_interpretation_of_f() {
        for n in 1..=4 {
            assert_eq!(f_sequence_by_fillings(n), f_sequence(n), "n={n}");
        }
    }

    #[test]
    fn four_counts_agree() {
        for n in 1..=5 {
            for mu in partitions_inside(&Partition::staircase(n - 1)) {
                let r = BigInt::from(rff_enumerate(&mu, n).len());
                assert_eq!(binomial_det(&mu, n), r);
                assert_eq!(BigInt::from(gv_enumerate(&mu, n).len()), r);
                assert_eq!(normalized_lascoux_det(&mu, n).unwrap(), r);
            }
        }
    }

    #[test]
    fn antisymmetrizer_form() {
        for n in 1..=4 {
            let a = Alphabets::single(n);
            let f = (1..=n).fold(MultiPoly::one(a), |acc, i| {
                let xi = MultiPoly::x(a, i);
                let one_plus = &MultiPoly::one(a) + &xi;
                &acc * &(&xi * &one_plus).pow(n - i)
            });
            assert_eq!(antisymmetrize(&f, n), wedge_product(n), "n={n}");
        }
    }
}
