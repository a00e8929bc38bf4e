use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::kostka::KostkaTable;
use super::schur::schur_poly;
use crate::combinat::{partitions_of, permutations, Partition};
use crate::error::{Error, Result};
use crate::polyring::{Alphabets, Monomial, MultiPoly};

/// Coefficients `c_λ` of `f = Σ c_λ s_λ(X_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    pub n: usize,
    pub terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// First negative coefficient in graded lexicographic order.
    pub fn first_negative(&self) -> Option<(&Partition, &BigInt)> {
        self.terms.iter().find(|(_, c)| c.is_negative())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `Σ c_λ s_λ(X_n)` as a polynomial.
    pub fn to_polynomial(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(Alphabets::single(self.n));
        for (lambda, c) in &self.terms {
            out = &out + &schur_poly(lambda, self.n).scale(c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term<'a> {
            lambda: &'a Partition,
            coeff: String,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            n: usize,
            terms: Vec<Term<'a>>,
        }
        let doc = Doc {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(lambda, c)| Term {
                    lambda,
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }
}

/// Coefficients `a_{λ,μ}` of `f = Σ a_{λ,μ} s_λ(X_n) s_μ(Y_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleSchurExpansion {
    pub n: usize,
    pub m: usize,
    pub terms: BTreeMap<(Partition, Partition), BigInt>,
}

impl DoubleSchurExpansion {
    pub fn coefficient(&self, lambda: &Partition, mu: &Partition) -> BigInt {
        self.terms
            .get(&(lambda.clone(), mu.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn first_negative(&self) -> Option<(&(Partition, Partition), &BigInt)> {
        self.terms.iter().find(|(_, c)| c.is_negative())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }

    pub fn to_polynomial(&self) -> MultiPoly {
        let alph = Alphabets::double(self.n, self.m);
        let mut out = MultiPoly::zero(alph);
        for ((lambda, mu), c) in &self.terms {
            let sx = schur_poly(lambda, self.n).embed(alph);
            let sy = place_in_y(&schur_poly(mu, self.m), alph);
            out = &out + &(&sx * &sy).scale(c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term<'a> {
            lambda: &'a Partition,
            mu: &'a Partition,
            coeff: String,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            n: usize,
            m: usize,
            terms: Vec<Term<'a>>,
        }
        let doc = Doc {
            n: self.n,
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|((lambda, mu), c)| Term {
                    lambda,
                    mu,
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }
}

/// Moves a polynomial in `X_m` into the `y` slots of `alph`.
fn place_in_y(p: &MultiPoly, alph: Alphabets) -> MultiPoly {
    let n = alph.x;
    MultiPoly::from_terms(
        alph,
        p.terms().iter().map(|(m, c)| {
            let mut exps = vec![0u16; alph.width()];
            exps[n..].copy_from_slice(&m.exps);
            (Monomial::from_exps(m.q, &exps), c.clone())
        }),
    )
}

fn symmetric_in_slots(f: &MultiPoly, start: usize, len: usize) -> bool {
    (start..start + len.saturating_sub(1)).all(|i| f.swap_slots(i, i + 1) == *f)
}

pub fn is_symmetric_in_x(f: &MultiPoly) -> bool {
    symmetric_in_slots(f, 0, f.alphabets().x)
}

pub fn is_symmetric_in_y(f: &MultiPoly) -> bool {
    let a = f.alphabets();
    symmetric_in_slots(f, a.x, a.y.unwrap_or(0))
}

/// Invariance under every adjacent transposition within each alphabet.
pub fn is_symmetric(f: &MultiPoly) -> bool {
    is_symmetric_in_x(f) && is_symmetric_in_y(f)
}

fn is_weakly_decreasing(v: &[u16]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

fn to_partition(v: &[u16]) -> Partition {
    Partition::new(v.iter().map(|&e| e as usize).collect::<Vec<_>>()).expect("decreasing exponents")
}

/// Peels `Σ c_λ s_λ(X_n)` from the coefficients of a symmetric polynomial
/// at its dominant (weakly decreasing) exponent vectors.
///
/// Within each degree, partitions are visited in lexicographically
/// decreasing order; the current coefficient of the greatest remaining
/// monomial is `c_λ`, and `c_λ s_λ` is subtracted on the dominant monomials
/// via Kostka numbers.
fn peel(n: usize, dominant: &HashMap<Partition, BigInt>, table: &mut KostkaTable) -> BTreeMap<Partition, BigInt> {
    let degrees: BTreeSet<usize> = dominant.keys().map(Partition::size).collect();
    let mut out = BTreeMap::new();
    for d in degrees {
        let order = partitions_of(d, n);
        let mut current: Vec<BigInt> = order
            .iter()
            .map(|p| dominant.get(p).cloned().unwrap_or_default())
            .collect();
        for i in 0..order.len() {
            if current[i].is_zero() {
                continue;
            }
            let c = current[i].clone();
            let lambda = &order[i];
            for j in i..order.len() {
                let k = table.get(lambda, &order[j]);
                if !k.is_zero() {
                    current[j] -= &c * k;
                }
            }
            debug_assert!(current[i].is_zero());
            out.insert(lambda.clone(), c);
        }
    }
    out
}

fn dominant_part(f: &MultiPoly, slots: std::ops::Range<usize>) -> HashMap<Partition, BigInt> {
    f.terms()
        .iter()
        .filter(|(m, _)| is_weakly_decreasing(&m.exps[slots.clone()]))
        .map(|(m, c)| (to_partition(&m.exps[slots.clone()]), c.clone()))
        .collect()
}

/// Schur expansion of a symmetric polynomial in one alphabet and no `q`.
///
/// Errors on non-symmetric input. Coefficients may be negative.
pub fn schur_expand(f: &MultiPoly) -> Result<SchurExpansion> {
    let alph = f.alphabets();
    if alph.y.is_some() || f.max_q() > 0 {
        return Err(Error::OutOfRange(
            "schur_expand takes a q-free polynomial in one alphabet".into(),
        ));
    }
    if let Some((m, _)) = f.leading() {
        if !is_weakly_decreasing(&m.exps) {
            return Err(Error::LeadingNotPartition(m.exps.iter().map(|&e| e as u32).collect()));
        }
    }
    if !is_symmetric_in_x(f) {
        return Err(Error::NotSymmetric("X"));
    }
    let mut table = KostkaTable::new();
    let terms = peel(alph.x, &dominant_part(f, 0..alph.x), &mut table);
    Ok(SchurExpansion { n: alph.x, terms })
}

/// Schur coefficients by reading `c_λ = [x^{λ+δ}] (Δ_n · f)` directly from
/// the monomial coefficients of `f`. An independent route to
/// [`schur_expand`]; assumes `f` is symmetric and does not check it.
pub fn schur_coefficients_by_alternant(f: &MultiPoly) -> SchurExpansion {
    let n = f.alphabets().x;
    let perms: Vec<(Vec<usize>, i32)> = permutations(n)
        .into_iter()
        .map(|w| {
            let shifted = w.word().iter().map(|&v| n - v).collect();
            (shifted, w.sign())
        })
        .collect();
    let degrees: BTreeSet<usize> = f.terms().keys().map(Monomial::degree).collect();
    let mut terms = BTreeMap::new();
    for d in degrees {
        for lambda in partitions_of(d, n) {
            let target: Vec<usize> = lambda.padded(n).iter().enumerate().map(|(i, &p)| p + n - 1 - i).collect();
            let mut c = BigInt::zero();
            for (shift, sign) in &perms {
                let exps: Option<Vec<u16>> = target
                    .iter()
                    .zip(shift)
                    .map(|(&t, &s)| t.checked_sub(s).map(|e| e as u16))
                    .collect();
                if let Some(exps) = exps {
                    let v = f.coefficient(&Monomial::from_exps(0, &exps));
                    if *sign > 0 {
                        c += v;
                    } else {
                        c -= v;
                    }
                }
            }
            if !c.is_zero() {
                terms.insert(lambda, c);
            }
        }
    }
    SchurExpansion { n, terms }
}

/// Expansion of a polynomial symmetric in `X_n` and in `Y_m` separately
/// into products `s_λ(X_n) s_μ(Y_m)`.
pub fn double_schur_expand(f: &MultiPoly) -> Result<DoubleSchurExpansion> {
    let alph = f.alphabets();
    let Some(m) = alph.y else {
        return Err(Error::OutOfRange("double_schur_expand needs two alphabets".into()));
    };
    if f.max_q() > 0 {
        return Err(Error::OutOfRange("double_schur_expand takes a q-free polynomial".into()));
    }
    if !is_symmetric_in_x(f) {
        return Err(Error::NotSymmetric("X"));
    }
    if !is_symmetric_in_y(f) {
        return Err(Error::NotSymmetric("Y"));
    }
    let n = alph.x;

    // f = Σ_β f_β(X) y^β; only dominant β are needed for the Y-peeling.
    let mut by_beta: BTreeMap<Vec<u16>, HashMap<Partition, BigInt>> = BTreeMap::new();
    for (mono, c) in f.terms() {
        let (xs, ys) = mono.exps.split_at(n);
        if is_weakly_decreasing(xs) && is_weakly_decreasing(ys) {
            by_beta
                .entry(ys.to_vec())
                .or_default()
                .insert(to_partition(xs), c.clone());
        }
    }
    let mut table = KostkaTable::new();
    let mut y_coeffs: BTreeMap<Partition, HashMap<Partition, BigInt>> = BTreeMap::new();
    for (beta, dominant) in &by_beta {
        let beta_p = to_partition(beta);
        for (lambda, c) in peel(n, dominant, &mut table) {
            y_coeffs.entry(lambda).or_default().insert(beta_p.clone(), c);
        }
    }
    let mut terms = BTreeMap::new();
    for (lambda, g) in y_coeffs {
        for (mu, c) in peel(m, &g, &mut table) {
            terms.insert((lambda.clone(), mu), c);
        }
    }
    Ok(DoubleSchurExpansion { n, m, terms })
}
