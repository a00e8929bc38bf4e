//! Symmetric functions in infinitely many variables, stored in the Schur
//! basis, with the Pieri products that are enough for every construction
//! in this crate.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use serde::Serialize;

use crate::combinat::{horizontal_strip_extensions, vertical_strip_extensions, Partition};
use crate::polyring::{Alphabets, MultiPoly};
use crate::symexpand::{schur_poly, SchurExpansion};

/// A finite `Σ c_λ s_λ`; degrees may be mixed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurVector {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        let mut v = Self::zero();
        v.add_term(lambda, BigInt::one());
        v
    }

    pub fn e(j: usize) -> Self {
        Self::schur(Partition::column(j))
    }

    pub fn h(j: usize) -> Self {
        Self::schur(Partition::row(j))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut v = Self::zero();
        for (l, c) in terms {
            v.add_term(l, c);
        }
        v
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        bump(&mut self.terms, lambda, c);
    }

    pub fn add(&self, other: &SchurVector) -> SchurVector {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SchurVector) -> SchurVector {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> SchurVector {
        if c.is_zero() {
            return Self::zero();
        }
        SchurVector {
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    /// The degree-`d` component.
    pub fn homogeneous_part(&self, d: usize) -> SchurVector {
        SchurVector {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// `Σ c_λ f^λ`, the dimension of the corresponding virtual module when
    /// the vector is homogeneous.
    pub fn dimension(&self) -> BigInt {
        self.terms.iter().map(|(l, c)| c * l.num_standard()).sum()
    }

    /// Keeps the terms with `ℓ(λ) ≤ n` as a Schur expansion in `n` variables.
    pub fn truncate(&self, n: usize) -> SchurExpansion {
        SchurExpansion {
            n,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.len() <= n)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term<'a> {
            lambda: &'a Partition,
            coeff: String,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            terms: Vec<Term<'a>>,
        }
        let terms = self
            .terms
            .iter()
            .map(|(lambda, c)| Term {
                lambda,
                coeff: c.to_string(),
            })
            .collect();
        serde_json::to_value(Doc { terms }).expect("serializable")
    }
}

impl From<SchurExpansion> for SchurVector {
    fn from(e: SchurExpansion) -> Self {
        SchurVector::from_terms(e.terms)
    }
}

fn bump<K: Ord>(terms: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Writes `c_λ s_λ` terms joined by signs, e.g. `s(2) + 2*s(1,1)`.
pub(crate) fn write_schur_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Partition, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (l, c) in terms {
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if !mag.is_one() {
            write!(f, "{mag}*")?;
        }
        write!(f, "s{l}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_schur_terms(f, self.terms.iter())
    }
}

/// Multiplication by `h_r` via horizontal strips.
pub fn pieri_h(v: &SchurVector, r: usize) -> SchurVector {
    let mut out = SchurVector::zero();
    for (mu, c) in &v.terms {
        for lambda in horizontal_strip_extensions(mu, r, None) {
            out.add_term(lambda, c.clone());
        }
    }
    out
}

/// Multiplication by `e_r` via vertical strips.
pub fn pieri_e(v: &SchurVector, r: usize) -> SchurVector {
    let mut out = SchurVector::zero();
    for (mu, c) in &v.terms {
        let bound = Partition::rectangle(mu.len() + r, mu.get(0) + 1);
        for lambda in vertical_strip_extensions(mu, r, &bound) {
            out.add_term(lambda, c.clone());
        }
    }
    out
}

/// `e_j · h_1^k`.
pub fn e_h_product(j: usize, k: usize) -> SchurVector {
    let mut v = SchurVector::e(j);
    for _ in 0..k {
        v = pieri_h(&v, 1);
    }
    v
}

/// `Σ c_λ s_λ(X_n)`.
pub fn restrict_to_vars(v: &SchurVector, n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(Alphabets::single(n));
    for (lambda, c) in &v.terms {
        if lambda.len() <= n {
            out = &out + &schur_poly(lambda, n).scale(c);
        }
    }
    out
}

/// A series `Σ c_{i,j,λ} q^i t^j s_λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedSchurSeries {
    terms: BTreeMap<(u32, u32, Partition), BigInt>,
}

/// What to do with one grading variable when specializing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialize {
    Keep,
    Value(BigInt),
}

impl Specialize {
    pub fn value(v: i64) -> Self {
        Specialize::Value(BigInt::from(v))
    }
}

impl GradedSchurSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32, Partition), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, q: u32, t: u32, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        bump(&mut self.terms, (q, t, lambda), c);
    }

    /// Adds `q^i t^j v`.
    pub fn add_vector(&mut self, q: u32, t: u32, v: &SchurVector) {
        for (l, c) in v.terms() {
            self.add_term(q, t, l.clone(), c.clone());
        }
    }

    /// The coefficient of `q^i t^j`.
    pub fn component(&self, q: u32, t: u32) -> SchurVector {
        SchurVector::from_terms(
            self.terms
                .iter()
                .filter(|((a, b, _), _)| *a == q && *b == t)
                .map(|((_, _, l), c)| (l.clone(), c.clone())),
        )
    }

    pub fn max_q(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn max_t(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Substitutes integers for `q` and/or `t`; a substituted variable's
    /// grading collapses to 0.
    pub fn specialize(&self, q: &Specialize, t: &Specialize) -> GradedSchurSeries {
        let mut out = GradedSchurSeries::zero();
        for ((i, j, l), c) in &self.terms {
            let (qi, qf) = factor(q, *i);
            let (tj, tf) = factor(t, *j);
            out.add_term(qi, tj, l.clone(), c * qf * tf);
        }
        out
    }

    /// Both variables substituted.
    pub fn evaluate(&self, q: i64, t: i64) -> SchurVector {
        self.specialize(&Specialize::value(q), &Specialize::value(t)).component(0, 0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term<'a> {
            q: u32,
            t: u32,
            lambda: &'a Partition,
            coeff: String,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            terms: Vec<Term<'a>>,
        }
        let terms = self
            .terms
            .iter()
            .map(|((q, t, lambda), c)| Term {
                q: *q,
                t: *t,
                lambda,
                coeff: c.to_string(),
            })
            .collect();
        serde_json::to_value(Doc { terms }).expect("serializable")
    }
}

fn factor(s: &Specialize, e: u32) -> (u32, BigInt) {
    match s {
        Specialize::Keep => (e, BigInt::one()),
        Specialize::Value(v) => (0, Pow::pow(v, e)),
    }
}

/// Free-function form of [`GradedSchurSeries::specialize`].
pub fn series_specialize(g: &GradedSchurSeries, q: &Specialize, t: &Specialize) -> GradedSchurSeries {
    g.specialize(q, t)
}

impl fmt::Display for GradedSchurSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut grades: Vec<(u32, u32)> = self.terms.keys().map(|k| (k.0, k.1)).collect();
        grades.dedup();
        if grades.is_empty() {
            return write!(f, "0");
        }
        for (idx, (q, t)) in grades.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "q^{q} t^{t}: {}", self.component(*q, *t))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v)
    }

    fn vec_of(items: &[(&[usize], i64)]) -> SchurVector {
        SchurVector::from_terms(items.iter().map(|(l, c)| (p(l), BigInt::from(*c))))
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_h(&SchurVector::one(), 2), vec_of(&[(&[2], 1)]));
        assert_eq!(pieri_h(&SchurVector::h(1), 1), vec_of(&[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(
            e_h_product(0, 3),
            vec_of(&[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)])
        );
        assert_eq!(pieri_e(&SchurVector::one(), 2), vec_of(&[(&[1, 1], 1)]));
        let want = vec_of(&[(&[2, 1], 1), (&[1, 1, 1], 1)]);
        assert_eq!(pieri_e(&SchurVector::h(1), 2), want);
        assert_eq!(pieri_h(&SchurVector::e(2), 1), want);
    }

    #[test]
    fn e_h_examples() {
        assert_eq!(e_h_product(0, 2), vec_of(&[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(e_h_product(2, 0), vec_of(&[(&[1, 1], 1)]));
        assert_eq!(e_h_product(1, 1), vec_of(&[(&[2], 1), (&[1, 1], 1)]));
    }

    #[test]
    fn e_h_dimensions() {
        for j in 0..=7usize {
            for k in 0..=(7 - j) {
                let want: BigInt = ((j + 1)..=(j + k)).map(BigInt::from).product();
                assert_eq!(e_h_product(j, k).dimension(), want, "j={j} k={k}");
            }
        }
    }

    #[test]
    fn restriction() {
        assert!(restrict_to_vars(&SchurVector::e(3), 2).is_zero());
        let a = Alphabets::single(2);
        let e1 = &MultiPoly::x(a, 1) + &MultiPoly::x(a, 2);
        assert_eq!(restrict_to_vars(&e_h_product(0, 2), 2), e1.pow(2));
        let a3 = Alphabets::single(3);
        let x = |i| MultiPoly::x(a3, i);
        let e1 = &(&x(1) + &x(2)) + &x(3);
        let e2 = &(&(&x(1) * &x(2)) + &(&x(1) * &x(3))) + &(&x(2) * &x(3));
        assert_eq!(restrict_to_vars(&e_h_product(2, 1), 3), &e2 * &e1);
    }

    #[test]
    fn pieri_matches_polynomial_products() {
        let sample = vec_of(&[(&[2, 1], 1), (&[1], -2), (&[], 3)]);
        for n in 1..=4 {
            for r in 0..=3 {
                let hr = restrict_to_vars(&SchurVector::h(r), n);
                let er = restrict_to_vars(&SchurVector::e(r), n);
                let base = restrict_to_vars(&sample, n);
                assert_eq!(restrict_to_vars(&pieri_h(&sample, r), n), &base * &hr);
                assert_eq!(restrict_to_vars(&pieri_e(&sample, r), n), &base * &er);
            }
        }
    }

    #[test]
    fn specialization_collapses() {
        let mut g = GradedSchurSeries::zero();
        for j in 0..=3u32 {
            g.add_vector(j, 0, &e_h_product(j as usize, 3 - j as usize));
        }
        assert_eq!(g.evaluate(-1, 1), vec_of(&[(&[2, 1], 1)]));
        assert_eq!(g.specialize(&Specialize::value(0), &Specialize::Keep).component(0, 0), e_h_product(0, 3));
        let kept = g.specialize(&Specialize::Keep, &Specialize::value(5));
        assert_eq!(kept, g);
    }

    #[test]
    fn series_json_order() {
        let mut g = GradedSchurSeries::zero();
        g.add_term(1, 0, p(&[1]), BigInt::from(2));
        g.add_term(0, 0, p(&[1, 1]), BigInt::from(1));
        g.add_term(0, 0, p(&[2]), BigInt::from(1));
        assert_eq!(
            serde_json::to_string(&g.to_json()).unwrap(),
            r#"{"terms":[{"q":0,"t":0,"lambda":[2],"coeff":"1"},{"q":0,"t":0,"lambda":[1,1],"coeff":"1"},{"q":1,"t":0,"lambda":[1],"coeff":"2"}]}"#
        );
    }
}
