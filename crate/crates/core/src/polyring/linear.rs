use num_bigint::BigInt;
use rayon::prelude::*;

use super::poly::{Alphabets, Monomial, MultiPoly};

/// `c + Σ a_i x_i + Σ b_j y_j + q · Σ d_i x_i` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinearForm {
    pub constant: i64,
    pub x: Vec<i64>,
    pub y: Vec<i64>,
    pub q_x: Vec<i64>,
}

impl LinearForm {
    pub fn zero(alph: Alphabets) -> Self {
        LinearForm {
            constant: 0,
            x: vec![0; alph.x],
            y: vec![0; alph.y.unwrap_or(0)],
            q_x: vec![0; alph.x],
        }
    }

    /// `Σ_{i ∈ xs} x_i + Σ_{j ∈ ys} y_j` with 1-based indices.
    pub fn subset_sum(alph: Alphabets, xs: &[usize], ys: &[usize]) -> Self {
        let mut f = Self::zero(alph);
        for &i in xs {
            f.x[i - 1] += 1;
        }
        for &j in ys {
            f.y[j - 1] += 1;
        }
        f
    }

    pub fn with_constant(mut self, c: i64) -> Self {
        self.constant = c;
        self
    }

    /// Adds `q · x_i` (1-based).
    pub fn plus_q_x(mut self, i: usize) -> Self {
        self.q_x[i - 1] += 1;
        self
    }

    pub fn to_poly(&self, alph: Alphabets) -> MultiPoly {
        assert_eq!(self.x.len(), alph.x);
        assert_eq!(self.y.len(), alph.y.unwrap_or(0));
        let w = alph.width();
        let mut p = MultiPoly::zero(alph);
        p.add_term(Monomial::one(w), BigInt::from(self.constant));
        for (slot, &c) in self.x.iter().chain(&self.y).enumerate() {
            let mut m = Monomial::one(w);
            m.exps[slot] = 1;
            p.add_term(m, BigInt::from(c));
        }
        for (slot, &c) in self.q_x.iter().enumerate() {
            let mut m = Monomial::one(w);
            m.q = 1;
            m.exps[slot] = 1;
            p.add_term(m, BigInt::from(c));
        }
        p
    }
}

/// The product of the given linear forms, multiplied in the given order
/// with like terms combined after every factor. The empty product is 1.
pub fn expand_linear_forms(alph: Alphabets, forms: &[LinearForm]) -> MultiPoly {
    forms
        .iter()
        .fold(MultiPoly::one(alph), |acc, f| &acc * &f.to_poly(alph))
}

/// Same product, split into contiguous chunks multiplied on the rayon pool
/// and combined left to right. Exact arithmetic makes the result identical
/// to [`expand_linear_forms`].
pub fn expand_linear_forms_parallel(alph: Alphabets, forms: &[LinearForm]) -> MultiPoly {
    let threads = rayon::current_num_threads().max(1);
    if threads == 1 || forms.len() < 8 {
        return expand_linear_forms(alph, forms);
    }
    let chunk = forms.len().div_ceil(threads);
    let parts: Vec<MultiPoly> = forms
        .par_chunks(chunk)
        .map(|c| expand_linear_forms(alph, c))
        .collect();
    parts.iter().fold(MultiPoly::one(alph), |acc, p| &acc * p)
}
