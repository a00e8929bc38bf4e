use std::collections::HashMap;


use super::bundle::{chern_roots, BundleExpr, RootMultiset};
use crate::combinat::Partition;
use crate::error::Result;
use crate::polyring::{expand_linear_forms_parallel, MultiPoly};
use crate::schurbasis::SchurVector;
use crate::symexpand::{double_schur_expand, schur_expand, DoubleSchurExpansion, SchurExpansion};

/// A symmetric function to evaluate at Chern roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymFn {
    E(usize),
    H(usize),
    P(usize),
    S(Partition),
    Vector(SchurVector),
}

/// `[e_0, …, e_d]` of the roots.
fn elementary(roots: &[MultiPoly], d: usize, zero: &MultiPoly) -> Vec<MultiPoly> {
    let one = MultiPoly::one(zero.alphabets());
    let mut e = vec![zero.clone(); d + 1];
    e[0] = one;
    for r in roots {
        for k in (1..=d).rev() {
            e[k] = &e[k] + &(&e[k - 1] * r);
        }
    }
    e
}

/// `[h_0, …, h_d]` of the roots.
fn complete(roots: &[MultiPoly], d: usize, zero: &MultiPoly) -> Vec<MultiPoly> {
    let one = MultiPoly::one(zero.alphabets());
    let mut h = vec![zero.clone(); d + 1];
    h[0] = one;
    for r in roots {
        for k in 1..=d {
            h[k] = &h[k] + &(&h[k - 1] * r);
        }
    }
    h
}

/// `det(a_{λ_i − i + j})` by Laplace expansion along rows, memoized on the
/// set of columns still available.
fn jacobi_trudi(lambda: &Partition, seq: &[MultiPoly], zero: &MultiPoly) -> MultiPoly {
    let l = lambda.len();
    let entry = |i: usize, j: usize| -> Option<&MultiPoly> {
        let idx = lambda.get(i) as i64 - i as i64 + j as i64;
        if idx < 0 {
            None
        } else {
            seq.get(idx as usize)
        }
    };
    let mut memo: HashMap<u64, MultiPoly> = HashMap::new();
    fn rec<'a>(
        row: usize,
        cols: u64,
        l: usize,
        entry: &dyn Fn(usize, usize) -> Option<&'a MultiPoly>,
        zero: &MultiPoly,
        memo: &mut HashMap<u64, MultiPoly>,
    ) -> MultiPoly {
        if row == l {
            return MultiPoly::one(zero.alphabets());
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = zero.clone();
        let mut sign_pos = true;
        for j in 0..l {
            if cols & (1 << j) == 0 {
                continue;
            }
            if let Some(a) = entry(row, j) {
                if !a.is_zero() {
                    let minor = rec(row + 1, cols & !(1 << j), l, entry, zero, memo);
                    let term = a * &minor;
                    acc = if sign_pos { &acc + &term } else { &acc - &term };
                }
            }
            sign_pos = !sign_pos;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    rec(0, (1u64 << l) - 1, l, &entry, zero, &mut memo)
}

fn schur_at(lambda: &Partition, roots: &[MultiPoly], zero: &MultiPoly) -> MultiPoly {
    if lambda.is_empty() {
        return MultiPoly::one(zero.alphabets());
    }
    let conj = lambda.conjugate();
    if conj.len() < lambda.len() {
        let e = elementary(roots, conj.get(0) + conj.len(), zero);
        jacobi_trudi(&conj, &e, zero)
    } else {
        let h = complete(roots, lambda.get(0) + lambda.len(), zero);
        jacobi_trudi(lambda, &h, zero)
    }
}

fn evaluate(f: &SymFn, roots: &RootMultiset) -> MultiPoly {
    let zero = MultiPoly::zero(roots.alph);
    let polys = roots.polys();
    match f {
        SymFn::E(d) => elementary(&polys, *d, &zero).pop().expect("d + 1 entries"),
        SymFn::H(d) => complete(&polys, *d, &zero).pop().expect("d + 1 entries"),
        SymFn::P(d) => polys.iter().fold(zero.clone(), |acc, r| &acc + &r.pow(*d)),
        SymFn::S(l) => schur_at(l, &polys, &zero),
        SymFn::Vector(v) => v.terms().iter().fold(zero.clone(), |acc, (l, c)| {
            &acc + &schur_at(l, &polys, &zero).scale(c)
        }),
    }
}

/// `F(e)`: the symmetric function evaluated at the Chern roots of `e`.
pub fn chern_plethysm(f: &SymFn, e: &BundleExpr) -> Result<MultiPoly> {
    Ok(evaluate(f, &chern_roots(e)?))
}

/// `c(e) = ∏_r (1 + r)`.
pub fn total_chern(e: &BundleExpr) -> Result<MultiPoly> {
    let roots = chern_roots(e)?;
    let forms: Vec<_> = roots.roots.iter().map(|r| r.clone().with_constant(1)).collect();
    Ok(expand_linear_forms_parallel(roots.alph, &forms))
}

#[derive(Clone, Debug)]
pub enum PragaczExpansion {
    Single(SchurExpansion),
    Double(DoubleSchurExpansion),
}

#[derive(Clone, Debug)]
pub struct Pragacz {
    pub positive: bool,
    pub expansion: PragaczExpansion,
}

/// Expands `s_λ` at the Chern roots of `e` in Schur polynomials of each
/// base alphabet and reports whether every coefficient is nonnegative.
pub fn pragacz_check(lambda: &Partition, e: &BundleExpr) -> Result<Pragacz> {
    let f = chern_plethysm(&SymFn::S(lambda.clone()), e)?;
    if f.alphabets().y.is_some() {
        let ex = double_schur_expand(&f)?;
        Ok(Pragacz {
            positive: ex.is_nonnegative(),
            expansion: PragaczExpansion::Double(ex),
        })
    } else {
        let ex = schur_expand(&f)?;
        Ok(Pragacz {
            positive: ex.is_nonnegative(),
            expansion: PragaczExpansion::Single(ex),
        })
    }
}
