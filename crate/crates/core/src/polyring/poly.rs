use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Declared alphabet sizes: `n` variables `x_1..x_n` and optionally `m`
/// variables `y_1..y_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabets {
    pub x: usize,
    pub y: Option<usize>,
}

impl Alphabets {
    pub fn single(n: usize) -> Self {
        Alphabets { x: n, y: None }
    }

    pub fn double(n: usize, m: usize) -> Self {
        Alphabets { x: n, y: Some(m) }
    }

    /// Total number of exponent slots.
    pub fn width(&self) -> usize {
        self.x + self.y.unwrap_or(0)
    }
}

impl fmt::Display for Alphabets {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.y {
            Some(m) => write!(f, "X_{}, Y_{}", self.x, m),
            None => write!(f, "X_{}", self.x),
        }
    }
}

pub(crate) type Exps = SmallVec<[u16; 8]>;

/// `q^q · x^a · y^b`, with `x` and `y` exponents stored back to back.
///
/// The derived ordering is lexicographic on `(q, x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub q: u32,
    pub exps: Exps,
}

impl Monomial {
    pub fn one(width: usize) -> Self {
        Monomial {
            q: 0,
            exps: SmallVec::from_elem(0, width),
        }
    }

    pub fn from_exps(q: u32, exps: &[u16]) -> Self {
        Monomial {
            q,
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            q: self.q + other.q,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub(crate) fn mul_pub(&self, other: &Monomial) -> Monomial {
        self.mul(other)
    }

    pub(crate) fn checked_div_pub(&self, other: &Monomial) -> Option<Monomial> {
        if other.q > self.q || self.exps.iter().zip(&other.exps).any(|(a, b)| b > a) {
            return None;
        }
        Some(Monomial {
            q: self.q - other.q,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }
}

/// A polynomial with arbitrary-precision integer coefficients. No zero
/// coefficient is ever stored, so the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    alph: Alphabets,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(alph: Alphabets) -> Self {
        MultiPoly {
            alph,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alph: Alphabets) -> Self {
        Self::constant(alph, BigInt::one())
    }

    pub fn constant(alph: Alphabets, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(alph);
        p.add_term(Monomial::one(alph.width()), c.into());
        p
    }

    /// `x_i`, 1-based.
    pub fn x(alph: Alphabets, i: usize) -> Self {
        assert!(i >= 1 && i <= alph.x, "x_{i} not in {alph}");
        let mut m = Monomial::one(alph.width());
        m.exps[i - 1] = 1;
        let mut p = Self::zero(alph);
        p.add_term(m, BigInt::one());
        p
    }

    /// `y_j`, 1-based.
    pub fn y(alph: Alphabets, j: usize) -> Self {
        let m_len = alph.y.expect("no y alphabet declared");
        assert!(j >= 1 && j <= m_len, "y_{j} not in {alph}");
        let mut m = Monomial::one(alph.width());
        m.exps[alph.x + j - 1] = 1;
        let mut p = Self::zero(alph);
        p.add_term(m, BigInt::one());
        p
    }

    /// The formal parameter `q`.
    pub fn q(alph: Alphabets) -> Self {
        let mut m = Monomial::one(alph.width());
        m.q = 1;
        let mut p = Self::zero(alph);
        p.add_term(m, BigInt::one());
        p
    }

    pub fn from_terms(alph: Alphabets, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero(alph);
        for (m, c) in terms {
            assert_eq!(m.exps.len(), alph.width(), "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    pub fn alphabets(&self) -> Alphabets {
        self.alph
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, BigInt> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Adds `c · m`, keeping the map free of zeros.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest monomial in the `(q, x, y)` lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    /// Total degree in the `x` and `y` variables (`q` excluded).
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn check(&self, other: &MultiPoly) -> Result<()> {
        if self.alph != other.alph {
            return Err(Error::AlphabetMismatch {
                left: self.alph.to_string(),
                right: other.alph.to_string(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.alph));
        }
        let (big, small) = if self.len() >= other.len() { (self, other) } else { (other, self) };
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(big.len() * small.len().min(8));
        for (sm, sc) in &small.terms {
            for (bm, bc) in &big.terms {
                let m = bm.mul(sm);
                let prod = bc * sc;
                acc.entry(m).and_modify(|c| *c += &prod).or_insert(prod);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(MultiPoly { alph: self.alph, terms })
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.alph);
        }
        MultiPoly {
            alph: self.alph,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> MultiPoly {
        (0..e).fold(Self::one(self.alph), |acc, _| &acc * self)
    }

    /// Exact quotient `self / d` when `d` divides `self`.
    pub fn exact_divide(&self, d: &MultiPoly) -> Result<MultiPoly> {
        self.check(d)?;
        super::divide::exact_divide(self, d)
    }

    /// Sum of coefficients with every variable set to 1 and `q` set to
    /// `q_value` (1 when `None`).
    pub fn evaluate_all_ones(&self, q_value: Option<&BigInt>) -> BigInt {
        let one = BigInt::one();
        let qv = q_value.unwrap_or(&one);
        self.terms
            .iter()
            .map(|(m, c)| c * num_traits::pow(qv.clone(), m.q as usize))
            .sum()
    }

    /// Substitutes an integer for `q`, leaving a polynomial with no `q`.
    pub fn specialize_q(&self, value: &BigInt) -> MultiPoly {
        let mut out = Self::zero(self.alph);
        for (m, c) in &self.terms {
            let mut base = m.clone();
            base.q = 0;
            out.add_term(base, c * num_traits::pow(value.clone(), m.q as usize));
        }
        out
    }

    /// The coefficient of `q^j`, as a polynomial with no `q`.
    pub fn q_coefficient(&self, j: u32) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.q == j)
            .map(|(m, c)| {
                let mut base = m.clone();
                base.q = 0;
                (base, c.clone())
            })
            .collect();
        MultiPoly { alph: self.alph, terms }
    }

    pub fn max_q(&self) -> u32 {
        self.terms.keys().map(|m| m.q).max().unwrap_or(0)
    }

    /// Component of total degree `d`.
    pub fn homogeneous_part(&self, d: usize) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        MultiPoly { alph: self.alph, terms }
    }

    /// Sets every `y_j` to zero and drops the `y` alphabet.
    pub fn set_y_zero(&self) -> MultiPoly {
        let n = self.alph.x;
        let alph = Alphabets::single(n);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps[n..].iter().all(|&e| e == 0))
            .map(|(m, c)| {
                (
                    Monomial {
                        q: m.q,
                        exps: SmallVec::from_slice(&m.exps[..n]),
                    },
                    c.clone(),
                )
            })
            .collect();
        MultiPoly { alph, terms }
    }

    /// Applies `w.x_i = x_{w(i)}` to the `x` variables; `perm` is a
    /// one-line word of `1..=n`.
    pub fn permute_x(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.alph.x);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps.clone();
                for (i, &w) in perm.iter().enumerate() {
                    exps[w - 1] = m.exps[i];
                }
                (Monomial { q: m.q, exps }, c.clone())
            })
            .collect();
        MultiPoly { alph: self.alph, terms }
    }

    /// Exchanges exponent slots `a` and `b` (absolute positions).
    pub(crate) fn swap_slots(&self, a: usize, b: usize) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps.clone();
                exps.swap(a, b);
                (Monomial { q: m.q, exps }, c.clone())
            })
            .collect();
        MultiPoly { alph: self.alph, terms }
    }

    /// Reinterprets the polynomial over a wider alphabet declaration,
    /// padding with zero exponents. Panics if `alph` is narrower.
    pub fn embed(&self, alph: Alphabets) -> MultiPoly {
        assert!(alph.x >= self.alph.x && alph.y.unwrap_or(0) >= self.alph.y.unwrap_or(0));
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps: Exps = SmallVec::from_elem(0, alph.width());
                exps[..self.alph.x].copy_from_slice(&m.exps[..self.alph.x]);
                let ys = &m.exps[self.alph.x..];
                exps[alph.x..alph.x + ys.len()].copy_from_slice(ys);
                (Monomial { q: m.q, exps }, c.clone())
            })
            .collect();
        MultiPoly { alph, terms }
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        let n = self.alph.x;
        self.terms
            .iter()
            .map(|(m, c)| TermJson {
                q: m.q,
                x: m.exps[..n].iter().map(|&e| e as u32).collect(),
                y: self.alph.y.map(|_| m.exps[n..].iter().map(|&e| e as u32).collect()),
                c: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(alph: Alphabets, terms: &[TermJson]) -> Result<MultiPoly> {
        let mut p = Self::zero(alph);
        for t in terms {
            let ys = t.y.as_deref().unwrap_or(&[]);
            if t.x.len() != alph.x || ys.len() != alph.y.unwrap_or(0) || t.y.is_some() != alph.y.is_some() {
                return Err(Error::AlphabetMismatch {
                    left: alph.to_string(),
                    right: format!("term with {} x and {} y exponents", t.x.len(), ys.len()),
                });
            }
            let exps: Exps = t.x.iter().chain(ys).map(|&e| e as u16).collect();
            let c: BigInt = t.c.parse().map_err(|_| Error::Parse {
                pos: 0,
                expected: format!("decimal coefficient, found {:?}", t.c),
            })?;
            p.add_term(Monomial { q: t.q, exps }, c);
        }
        Ok(p)
    }
}

/// Wire form of one term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub q: u32,
    pub x: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub y: Option<Vec<u32>>,
    pub c: String,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({self})", self.alph)
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in descending order, e.g. `x1^2 + 2*x1*x2 - y1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.alph.x;
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut factors = Vec::new();
            if m.q > 0 {
                factors.push(if m.q == 1 { "q".to_string() } else { format!("q^{}", m.q) });
            }
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if i < n { format!("x{}", i + 1) } else { format!("y{}", i - n + 1) };
                factors.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            let mag = c.abs();
            let body = match (factors.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => factors.join("*"),
                (false, false) => format!("{mag}*{}", factors.join("*")),
            };
            match (idx, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

// Operator forms panic on alphabet mismatch; use the `try_` methods when
// alphabets come from user input.
impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("alphabet mismatch in +")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("alphabet mismatch in -")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("alphabet mismatch in *")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::x(Alphabets::single(n), i)
    }

    #[test]
    fn identity_and_difference_of_squares() {
        let a = Alphabets::single(2);
        let p = &x(2, 1) + &x(2, 2);
        assert_eq!(&p * &MultiPoly::one(a), p);
        let d = &p * &(&x(2, 1) - &x(2, 2));
        assert_eq!(d, &x(2, 1).pow(2) - &x(2, 2).pow(2));
    }

    #[test]
    fn b32_by_hand() {
        let f = &(&(&x(3, 1) + &x(3, 2)) * &(&x(3, 1) + &x(3, 3))) * &(&x(3, 2) + &x(3, 3));
        // six monomials x_i^2 x_j plus 2 x1 x2 x3
        assert_eq!(f.len(), 7);
        assert_eq!(f.coefficient(&Monomial::from_exps(0, &[1, 1, 1])), BigInt::from(2));
        assert_eq!(f.evaluate_all_ones(None), BigInt::from(8));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = x(2, 1);
        let b = x(3, 1);
        assert!(matches!(a.try_mul(&b), Err(Error::AlphabetMismatch { .. })));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn zero_evaluates_to_zero() {
        assert_eq!(MultiPoly::zero(Alphabets::single(3)).evaluate_all_ones(None), BigInt::zero());
    }

    #[test]
    fn json_terms() {
        let a = Alphabets::double(1, 1);
        let p = &(&MultiPoly::x(a, 1) + &MultiPoly::y(a, 1)).scale(&BigInt::from(3)) + &MultiPoly::q(a);
        let js = serde_json::to_string(&p.to_json_terms()).unwrap();
        assert_eq!(
            js,
            r#"[{"q":0,"x":[0],"y":[1],"c":"3"},{"q":0,"x":[1],"y":[0],"c":"3"},{"q":1,"x":[0],"y":[0],"c":"1"}]"#
        );
        let back = MultiPoly::from_json_terms(a, &p.to_json_terms()).unwrap();
        assert_eq!(back, p);
        let single = x(2, 2).to_json_terms();
        assert_eq!(serde_json::to_string(&single).unwrap(), r#"[{"q":0,"x":[0,1],"c":"1"}]"#);
    }

    #[test]
    fn display() {
        let p = &(&x(2, 1).pow(2) - &x(2, 2)).scale(&BigInt::from(2)) + &MultiPoly::one(Alphabets::single(2));
        assert_eq!(p.to_string(), "2*x1^2 - 2*x2 + 1");
    }

    #[test]
    fn q_grading() {
        let a = Alphabets::single(1);
        let p = &(&MultiPoly::q(a) * &x(1, 1)) + &x(1, 1);
        assert_eq!(p.specialize_q(&BigInt::from(-1)), MultiPoly::zero(a));
        assert_eq!(p.q_coefficient(1), x(1, 1));
        assert_eq!(p.evaluate_all_ones(Some(&BigInt::from(2))), BigInt::from(3));
    }
}
