use num_bigint::BigInt;

use super::tbinom::{t_binomial, TPoly};
use crate::combinat::{syt_enumerate, Partition};
use crate::error::{Error, Result};
use crate::schurbasis::{pieri_e, GradedSchurSeries, SchurVector};

/// `Σ_{T ∈ SYT(n)} t^{maj(T)} s_{shape(T)}`.
pub fn coinvariant_grfrob(n: usize) -> GradedSchurSeries {
    let mut g = GradedSchurSeries::zero();
    for st in syt_enumerate(n) {
        g.add_term(0, st.maj as u32, st.shape().clone(), BigInt::from(1));
    }
    g
}

/// Multiplies every component of a `t`-graded series by `q^j e_j`.
fn times_q_e(g: &GradedSchurSeries, j: usize) -> GradedSchurSeries {
    let mut out = GradedSchurSeries::zero();
    for ((_, t, lambda), c) in g.terms() {
        let v = pieri_e(&SchurVector::from_terms([(lambda.clone(), c.clone())]), j);
        out.add_vector(j as u32, *t, &v);
    }
    out
}

fn merge(into: &mut GradedSchurSeries, g: &GradedSchurSeries) {
    for ((q, t, l), c) in g.terms() {
        into.add_term(*q, *t, l.clone(), c.clone());
    }
}

/// `Σ_j q^j e_j Σ_{T ∈ SYT(n−j)} t^{maj(T)} s_{shape(T)}`.
pub fn superspace_grfrob(n: usize) -> GradedSchurSeries {
    let mut g = GradedSchurSeries::zero();
    for j in 0..=n {
        merge(&mut g, &times_q_e(&coinvariant_grfrob(n - j), j));
    }
    g
}

fn add_scaled(g: &mut GradedSchurSeries, shape: &Partition, poly: &TPoly) {
    for (d, c) in poly.coeffs().iter().enumerate() {
        g.add_term(0, d as u32, shape.clone(), c.clone());
    }
}

/// Graded Frobenius image of `C[X_n]/I'_{n,k,r}` for `r ≤ k ≤ n`:
///
/// `Σ_{m=0}^{k−r} t^{m(n−k+m)} [k−r, m]_t Σ_T t^{maj(T)} [n−des(T)−1, n−k+m]_t s_{shape(T)}`.
///
/// For `n = 0` the quotient is the ground field, `s_∅`.
pub fn hrs_grfrob(n: usize, k: usize, r: usize) -> Result<GradedSchurSeries> {
    if r > k || k > n {
        return Err(Error::OutOfRange(format!("need r <= k <= n, got n={n}, k={k}, r={r}")));
    }
    let mut g = GradedSchurSeries::zero();
    if n == 0 {
        g.add_term(0, 0, Partition::empty(), BigInt::from(1));
        return Ok(g);
    }
    let syt = syt_enumerate(n);
    for m in 0..=(k - r) {
        let outer = &TPoly::monomial(m * (n - k + m), BigInt::from(1)) * &t_binomial((k - r) as i64, m as i64);
        for st in &syt {
            let inner = t_binomial(n as i64 - st.des as i64 - 1, (n - k + m) as i64);
            if inner.is_zero() {
                continue;
            }
            let poly = &(&outer * &TPoly::monomial(st.maj, BigInt::from(1))) * &inner;
            add_scaled(&mut g, st.shape(), &poly);
        }
    }
    Ok(g)
}

/// Handling of the terms of the superspace sum whose parameters fall
/// outside `r' ≤ k ≤ n'`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum UndefinedTerms {
    Skip,
    Error,
}

/// The series together with the indices `j` that were skipped.
#[derive(Clone, Debug)]
pub struct HrsResult {
    pub series: GradedSchurSeries,
    pub skipped: Vec<usize>,
}

/// `Σ_j q^j e_j grFrob(C[X_{n−j}]/I'_{n−j,k,r−j}; t)`.
///
/// Term `j` is used when `r − j ≥ 0` and either `r − j ≤ k ≤ n − j`, or
/// `r − j = n − j ≤ k`; in the latter case the ideal contains every
/// elementary symmetric polynomial and the quotient is the coinvariant
/// ring in `n − j` variables.
pub fn hrs_superspace(n: usize, k: usize, r: usize, policy: UndefinedTerms) -> Result<HrsResult> {
    if r > k || k > n {
        return Err(Error::OutOfRange(format!("need r <= k <= n, got n={n}, k={k}, r={r}")));
    }
    let mut series = GradedSchurSeries::zero();
    let mut skipped = Vec::new();
    for j in 0..=n {
        let np = n - j;
        let rp = r as i64 - j as i64;
        let inner = if rp >= 0 && (rp as usize) <= k && k <= np {
            Some(hrs_grfrob(np, k, rp as usize)?)
        } else if rp >= 0 && rp as usize == np && k >= np {
            Some(hrs_grfrob(np, np, np)?)
        } else {
            None
        };
        match inner {
            Some(g) => merge(&mut series, &times_q_e(&g, j)),
            None if policy == UndefinedTerms::Error => {
                return Err(Error::UndefinedTerm { j, n, k, r: rp });
            }
            None => skipped.push(j),
        }
    }
    Ok(HrsResult { series, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolprod::boolean_q_abstract;
    use crate::combinat::factorial;
    use crate::schurbasis::Specialize;

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v)
    }

    fn series(items: &[(u32, u32, &[usize], i64)]) -> GradedSchurSeries {
        let mut g = GradedSchurSeries::zero();
        for (q, t, l, c) in items {
            g.add_term(*q, *t, p(l), BigInt::from(*c));
        }
        g
    }

    #[test]
    fn coinvariants() {
        let want = series(&[(0, 0, &[3], 1), (0, 1, &[2, 1], 1), (0, 2, &[2, 1], 1), (0, 3, &[1, 1, 1], 1)]);
        assert_eq!(coinvariant_grfrob(3), want);
        assert_eq!(coinvariant_grfrob(1), series(&[(0, 0, &[1], 1)]));
        let at_one = coinvariant_grfrob(4).evaluate(1, 1);
        for (l, c) in at_one.terms() {
            assert_eq!(*c, l.num_standard());
        }
    }

    #[test]
    fn superspace_n3() {
        let e = |j| SchurVector::e(j);
        let mut want = GradedSchurSeries::zero();
        want.add_vector(3, 0, &e(3));
        want.add_vector(2, 0, &pieri_e(&SchurVector::h(1), 2));
        want.add_vector(1, 0, &pieri_e(&SchurVector::h(2), 1));
        want.add_vector(1, 1, &pieri_e(&e(2), 1));
        want.add_vector(0, 0, &SchurVector::h(3));
        want.add_vector(0, 1, &SchurVector::schur(p(&[2, 1])));
        want.add_vector(0, 2, &SchurVector::schur(p(&[2, 1])));
        want.add_vector(0, 3, &e(3));
        assert_eq!(superspace_grfrob(3), want);
    }

    #[test]
    fn superspace_specializations() {
        for n in 1..=6usize {
            let g = superspace_grfrob(n);
            let q0 = g.specialize(&Specialize::value(0), &Specialize::Keep);
            assert_eq!(q0, coinvariant_grfrob(n));
            let t1 = g.specialize(&Specialize::Keep, &Specialize::value(1));
            assert_eq!(t1, boolean_q_abstract(n).unwrap());
            let dim: BigInt = (0..=n)
                .map(|j| factorial(n) / (factorial(j) * factorial(n - j)) * factorial(n - j))
                .sum();
            assert_eq!(g.evaluate(1, 1).dimension(), dim);
        }
    }

    #[test]
    fn hrs_reduces_to_coinvariants() {
        for n in 1..=5 {
            assert_eq!(hrs_grfrob(n, n, n).unwrap(), coinvariant_grfrob(n));
        }
        assert_eq!(hrs_grfrob(1, 1, 1).unwrap(), series(&[(0, 0, &[1], 1)]));
        assert!(hrs_grfrob(2, 3, 1).is_err());
        assert!(hrs_grfrob(3, 1, 2).is_err());
    }

    #[test]
    fn hrs_n3_k2_r2() {
        // SYT(3): maj 0 des 0 (3); maj 2 des 1 (2,1); maj 1 des 1 (2,1); maj 3 des 2 (1,1,1).
        // [2 − des, 1]_t gives 1 + t, 1, 1, 0.
        let want = series(&[(0, 0, &[3], 1), (0, 1, &[3], 1), (0, 1, &[2, 1], 1), (0, 2, &[2, 1], 1)]);
        let got = hrs_grfrob(3, 2, 2).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn hrs_positive() {
        for n in 1..=5 {
            for k in 0..=n {
                for r in 0..=k {
                    assert!(hrs_grfrob(n, k, r).unwrap().is_nonnegative(), "({n},{k},{r})");
                }
            }
        }
    }

    #[test]
    fn superspace_variant() {
        let got = hrs_superspace(2, 2, 2, UndefinedTerms::Skip).unwrap();
        let mut want = series(&[(0, 0, &[2], 1), (0, 1, &[1, 1], 1)]);
        want.add_vector(1, 0, &pieri_e(&SchurVector::h(1), 1));
        want.add_vector(2, 0, &SchurVector::e(2));
        assert_eq!(got.series, want);
        assert!(got.skipped.is_empty());
        for n in 1..=4 {
            let r = hrs_superspace(n, n, n, UndefinedTerms::Error).unwrap();
            assert_eq!(r.series, superspace_grfrob(n));
        }
        let r = hrs_superspace(3, 2, 1, UndefinedTerms::Skip).unwrap();
        assert_eq!(r.skipped, vec![2, 3]);
        assert_eq!(
            hrs_superspace(3, 2, 1, UndefinedTerms::Error).unwrap_err(),
            Error::UndefinedTerm { j: 2, n: 3, k: 2, r: -1 }
        );
    }
}
