//! Boolean product polynomials and their `q` and two-alphabet variants.

use num_bigint::BigInt;

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::polyring::{expand_linear_forms_parallel, Alphabets, LinearForm, MultiPoly};
use crate::schurbasis::{e_h_product, GradedSchurSeries};
use crate::symexpand::{double_schur_expand, schur_expand, DoubleSchurExpansion, SchurExpansion};

/// The `k`-subsets of `{1, …, n}` in colexicographic order.
pub fn k_subsets_colex(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(top: usize, k: usize, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            let mut s = suffix.clone();
            s.reverse();
            out.push(s);
            return;
        }
        for largest in k..=top {
            suffix.push(largest);
            rec(largest - 1, k - 1, suffix, out);
            suffix.pop();
        }
    }
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::OutOfRange(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

fn subset_forms(n: usize, k: usize) -> Vec<LinearForm> {
    let alph = Alphabets::single(n);
    k_subsets_colex(n, k)
        .iter()
        .map(|s| LinearForm::subset_sum(alph, s, &[]))
        .collect()
}

/// `B_{n,k} = ∏_{|S| = k} Σ_{i ∈ S} x_i`.
pub fn boolean_product(n: usize, k: usize) -> Result<MultiPoly> {
    check_k(n, k)?;
    Ok(expand_linear_forms_parallel(Alphabets::single(n), &subset_forms(n, k)))
}

/// `B_n = ∏_{k=1}^{n} B_{n,k}`, of degree `2^n − 1`.
pub fn boolean_total(n: usize) -> Result<MultiPoly> {
    if n < 1 {
        return Err(Error::OutOfRange("need n >= 1".into()));
    }
    let forms: Vec<LinearForm> = (1..=n).flat_map(|k| subset_forms(n, k)).collect();
    Ok(expand_linear_forms_parallel(Alphabets::single(n), &forms))
}

/// `∏_{i=1}^{n} (x_1 + … + x_n + q x_i)`.
pub fn boolean_q(n: usize) -> Result<MultiPoly> {
    if n < 1 {
        return Err(Error::OutOfRange("need n >= 1".into()));
    }
    let alph = Alphabets::single(n);
    let all: Vec<usize> = (1..=n).collect();
    let forms: Vec<LinearForm> = (1..=n)
        .map(|i| LinearForm::subset_sum(alph, &all, &[]).plus_q_x(i))
        .collect();
    Ok(expand_linear_forms_parallel(alph, &forms))
}

/// `Σ_j q^j e_j h_1^{n−j}` in the Schur basis.
pub fn boolean_q_abstract(n: usize) -> Result<GradedSchurSeries> {
    if n < 1 {
        return Err(Error::OutOfRange("need n >= 1".into()));
    }
    let mut g = GradedSchurSeries::zero();
    for j in 0..=n {
        g.add_vector(j as u32, 0, &e_h_product(j, n - j));
    }
    Ok(g)
}

/// `∏ (Σ_{i ∈ S} x_i + Σ_{j ∈ T} y_j)` over `k`-subsets `S ⊆ [n]` and
/// `ℓ`-subsets `T ⊆ [m]`.
pub fn bivariate_boolean(n: usize, k: usize, m: usize, l: usize) -> Result<MultiPoly> {
    check_k(n, k)?;
    check_k(m, l)?;
    let alph = Alphabets::double(n, m);
    let ys = k_subsets_colex(m, l);
    let forms: Vec<LinearForm> = k_subsets_colex(n, k)
        .iter()
        .flat_map(|s| ys.iter().map(move |t| LinearForm::subset_sum(alph, s, t)))
        .collect();
    Ok(expand_linear_forms_parallel(alph, &forms))
}

/// Result of a Schur positivity check.
#[derive(Clone, Debug)]
pub struct Positivity {
    pub positive: bool,
    pub expansion: SchurExpansion,
    pub violation: Option<(Partition, BigInt)>,
}

/// Expands `f` in Schur polynomials and reports the first negative
/// coefficient, if any.
pub fn check_schur_positive(f: &MultiPoly) -> Result<Positivity> {
    let expansion = schur_expand(f)?;
    let violation = expansion.first_negative().map(|(l, c)| (l.clone(), c.clone()));
    Ok(Positivity {
        positive: violation.is_none(),
        expansion,
        violation,
    })
}

/// Two-alphabet counterpart of [`Positivity`].
#[derive(Clone, Debug)]
pub struct DoublePositivity {
    pub positive: bool,
    pub expansion: DoubleSchurExpansion,
    pub violation: Option<((Partition, Partition), BigInt)>,
}

pub fn check_double_schur_positive(f: &MultiPoly) -> Result<DoublePositivity> {
    let expansion = double_schur_expand(f)?;
    let violation = expansion.first_negative().map(|(l, c)| (l.clone(), c.clone()));
    Ok(DoublePositivity {
        positive: violation.is_none(),
        expansion,
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schurbasis::{restrict_to_vars, SchurVector};
    use crate::symexpand::schur_poly;
    use num_traits::Pow;

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v)
    }

    #[test]
    fn colex_order() {
        assert_eq!(
            k_subsets_colex(4, 2),
            vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4], vec![3, 4]]
        );
        assert_eq!(k_subsets_colex(3, 3), vec![vec![1, 2, 3]]);
        assert_eq!(k_subsets_colex(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn small_products() {
        let a = Alphabets::single(4);
        let e4 = (1..=4).fold(MultiPoly::one(a), |acc, i| &acc * &MultiPoly::x(a, i));
        assert_eq!(boolean_product(4, 1).unwrap(), e4);
        let a3 = Alphabets::single(3);
        let e1 = &(&MultiPoly::x(a3, 1) + &MultiPoly::x(a3, 2)) + &MultiPoly::x(a3, 3);
        assert_eq!(boolean_product(3, 3).unwrap(), e1);
        assert!(boolean_product(3, 4).is_err());
        assert!(boolean_product(3, 0).is_err());
        let b42 = boolean_product(4, 2).unwrap();
        assert_eq!(b42.degree(), Some(6));
        let x = |i| MultiPoly::x(a, i);
        let by_hand = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
            .iter()
            .fold(MultiPoly::one(a), |acc, &(i, j)| &acc * &(&x(i) + &x(j)));
        assert_eq!(b42, by_hand);
    }

    #[test]
    fn totals() {
        let a = Alphabets::single(1);
        assert_eq!(boolean_total(1).unwrap(), MultiPoly::x(a, 1));
        let a2 = Alphabets::single(2);
        let x1 = MultiPoly::x(a2, 1);
        let x2 = MultiPoly::x(a2, 2);
        assert_eq!(boolean_total(2).unwrap(), &(&x1 * &x2) * &(&x1 + &x2));
        let b3 = boolean_total(3).unwrap();
        assert_eq!(b3.degree(), Some(7));
        assert!(check_schur_positive(&b3).unwrap().positive);
    }

    #[test]
    fn evaluation_at_ones() {
        for n in 1..=5usize {
            for k in 1..=n {
                let binom = k_subsets_colex(n, k).len() as u32;
                assert_eq!(
                    boolean_product(n, k).unwrap().evaluate_all_ones(None),
                    Pow::pow(BigInt::from(k), binom)
                );
            }
        }
    }

    #[test]
    fn q_product_grades() {
        for n in 1..=4usize {
            let bq = boolean_q(n).unwrap();
            let g = boolean_q_abstract(n).unwrap();
            for j in 0..=n {
                let want = restrict_to_vars(&e_h_product(j, n - j), n);
                assert_eq!(bq.q_coefficient(j as u32), want, "n={n} j={j}");
                assert_eq!(restrict_to_vars(&g.component(j as u32, 0), n), want);
            }
        }
        let b3 = boolean_q(3).unwrap().specialize_q(&BigInt::from(-1));
        assert_eq!(b3, boolean_product(3, 2).unwrap());
    }

    #[test]
    fn abstract_two() {
        let g = boolean_q_abstract(2).unwrap();
        let h11 = SchurVector::from_terms([(p(&[2]), BigInt::from(1)), (p(&[1, 1]), BigInt::from(1))]);
        assert_eq!(g.component(0, 0), h11);
        assert_eq!(g.component(1, 0), h11);
        assert_eq!(g.component(2, 0), SchurVector::e(2));
    }

    #[test]
    fn staircase_for_pairs() {
        let r = check_schur_positive(&boolean_product(5, 2).unwrap()).unwrap();
        assert!(r.positive);
        assert_eq!(r.expansion.terms.len(), 1);
        assert_eq!(r.expansion.coefficient(&Partition::staircase(4)), BigInt::from(1));
        let f = &*schur_poly(&p(&[2]), 2) - &*schur_poly(&p(&[1, 1]), 2);
        let r = check_schur_positive(&f).unwrap();
        assert!(!r.positive);
        assert_eq!(r.violation, Some((p(&[1, 1]), BigInt::from(-1))));
    }

    #[test]
    fn bivariate_cases() {
        let a = Alphabets::double(2, 2);
        let x = |i| MultiPoly::x(a, i);
        let y = |j| MultiPoly::y(a, j);
        let all = &(&(&x(1) + &x(2)) + &y(1)) + &y(2);
        assert_eq!(bivariate_boolean(2, 2, 2, 2).unwrap(), all);
        let cauchy = (1..=2)
            .flat_map(|i| (1..=2).map(move |j| (i, j)))
            .fold(MultiPoly::one(a), |acc, (i, j)| &acc * &(&x(i) + &y(j)));
        assert_eq!(bivariate_boolean(2, 1, 2, 1).unwrap(), cauchy);
        let mixed = &(&(&x(1) + &x(2)) + &y(1)) * &(&(&x(1) + &x(2)) + &y(2));
        assert_eq!(bivariate_boolean(2, 2, 2, 1).unwrap(), mixed);
        let f = bivariate_boolean(3, 2, 1, 1).unwrap();
        assert_eq!(f.set_y_zero(), boolean_product(3, 2).unwrap());
    }
}
