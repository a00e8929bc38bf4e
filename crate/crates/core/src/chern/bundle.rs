use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::combinat::{ssyt_enumerate, Partition};
use crate::error::{Error, Result};
use crate::polyring::{Alphabets, LinearForm, MultiPoly};

/// Root count above which expansions are refused.
pub const DEFAULT_RANK_BOUND: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BundleExpr {
    Base { name: String, rank: usize },
    DirectSum(Box<BundleExpr>, Box<BundleExpr>),
    Tensor(Box<BundleExpr>, Box<BundleExpr>),
    SchurFunctor(Partition, Box<BundleExpr>),
}

impl BundleExpr {
    pub fn base(name: &str, rank: usize) -> Self {
        BundleExpr::Base {
            name: name.to_string(),
            rank,
        }
    }

    pub fn oplus(a: BundleExpr, b: BundleExpr) -> Self {
        BundleExpr::DirectSum(Box::new(a), Box::new(b))
    }

    pub fn tensor(a: BundleExpr, b: BundleExpr) -> Self {
        BundleExpr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn schur(lambda: Partition, e: BundleExpr) -> Self {
        BundleExpr::SchurFunctor(lambda, Box::new(e))
    }

    /// `∧^k`.
    pub fn wedge(k: usize, e: BundleExpr) -> Self {
        Self::schur(Partition::column(k), e)
    }

    /// `Sym^k`.
    pub fn sym(k: usize, e: BundleExpr) -> Self {
        Self::schur(Partition::row(k), e)
    }

    /// Rank from the node formulas: sums, products, and `|SSYT(λ, ≤ n)|`.
    pub fn rank(&self) -> BigInt {
        match self {
            BundleExpr::Base { rank, .. } => BigInt::from(*rank),
            BundleExpr::DirectSum(a, b) => a.rank() + b.rank(),
            BundleExpr::Tensor(a, b) => a.rank() * b.rank(),
            BundleExpr::SchurFunctor(l, e) => match e.rank().to_usize() {
                Some(n) => count_ssyt(l, n),
                None => BigInt::from(usize::MAX),
            },
        }
    }

    /// Base alphabets in order of first appearance.
    pub fn alphabets(&self) -> Result<Vec<(String, usize)>> {
        fn walk(e: &BundleExpr, out: &mut Vec<(String, usize)>) -> Result<()> {
            match e {
                BundleExpr::Base { name, rank } => {
                    if *rank == 0 {
                        return Err(Error::Bundle(format!("base {name} has rank 0")));
                    }
                    match out.iter().find(|(n, _)| n == name) {
                        Some((_, r)) if r != rank => {
                            return Err(Error::Bundle(format!("{name} used with ranks {r} and {rank}")));
                        }
                        Some(_) => {}
                        None => out.push((name.clone(), *rank)),
                    }
                    Ok(())
                }
                BundleExpr::DirectSum(a, b) | BundleExpr::Tensor(a, b) => {
                    walk(a, out)?;
                    walk(b, out)
                }
                BundleExpr::SchurFunctor(_, e) => walk(e, out),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out)?;
        if out.len() > 2 {
            return Err(Error::Bundle(format!("{} base bundles; at most two are supported", out.len())));
        }
        Ok(out)
    }

    /// The polynomial ring the roots live in.
    pub fn polynomial_alphabets(&self) -> Result<Alphabets> {
        let names = self.alphabets()?;
        Ok(match names.as_slice() {
            [(_, n)] => Alphabets::single(*n),
            [(_, n), (_, m)] => Alphabets::double(*n, *m),
            _ => unreachable!("an expression has at least one base"),
        })
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleExpr::Base { name, rank } => write!(f, "{name}:{rank}"),
            BundleExpr::DirectSum(a, b) => write!(f, "oplus({a}, {b})"),
            BundleExpr::Tensor(a, b) => write!(f, "tensor({a}, {b})"),
            BundleExpr::SchurFunctor(l, e) => {
                if l.len() == 1 {
                    write!(f, "sym({}, {e})", l.size())
                } else if l.parts().iter().all(|&p| p == 1) && !l.is_empty() {
                    write!(f, "wedge({}, {e})", l.size())
                } else {
                    let parts: Vec<String> = l.parts().iter().map(usize::to_string).collect();
                    write!(f, "schur([{}], {e})", parts.join(","))
                }
            }
        }
    }
}

/// `|SSYT(λ, ≤ n)| = ∏_□ (n + c(□)) / h(□)`.
pub fn count_ssyt(lambda: &Partition, n: usize) -> BigInt {
    if lambda.len() > n {
        return BigInt::from(0);
    }
    let conj = lambda.conjugate();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            num *= n + j - i;
            den *= (row - j) + (conj.get(j) - i) - 1;
        }
    }
    num / den
}

/// A multiset of integer linear forms in the base alphabets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootMultiset {
    pub alph: Alphabets,
    pub roots: Vec<LinearForm>,
}

impl RootMultiset {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn polys(&self) -> Vec<MultiPoly> {
        self.roots.iter().map(|r| r.to_poly(self.alph)).collect()
    }

    /// Roots in a canonical order, for multiset comparison.
    pub fn sorted(&self) -> Vec<LinearForm> {
        let mut v = self.roots.clone();
        v.sort_by(|a, b| (&a.x, &a.y).cmp(&(&b.x, &b.y)));
        v
    }
}

impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.roots.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", r.to_poly(self.alph))?;
        }
        Ok(())
    }
}

/// Chern roots with the default rank bound.
pub fn chern_roots(e: &BundleExpr) -> Result<RootMultiset> {
    chern_roots_bounded(e, DEFAULT_RANK_BOUND)
}

/// Chern roots: bases give their variables, `⊕` takes the multiset union,
/// `⊗` takes all pairwise sums, and `S^λ` takes `Σ_□ r_{T(□)}` over
/// `T ∈ SSYT(λ, ≤ rank)`.
pub fn chern_roots_bounded(e: &BundleExpr, bound: usize) -> Result<RootMultiset> {
    let names = e.alphabets()?;
    let alph = e.polynomial_alphabets()?;
    let roots = roots_rec(e, &names, alph, bound)?;
    Ok(RootMultiset { alph, roots })
}

fn check_rank(e: &BundleExpr, bound: usize) -> Result<()> {
    let rank = e.rank();
    if rank > BigInt::from(bound) {
        return Err(Error::RankBound {
            rank: rank.to_usize().unwrap_or(usize::MAX),
            bound,
        });
    }
    Ok(())
}

fn add_forms(a: &LinearForm, b: &LinearForm) -> LinearForm {
    LinearForm {
        constant: a.constant + b.constant,
        x: a.x.iter().zip(&b.x).map(|(u, v)| u + v).collect(),
        y: a.y.iter().zip(&b.y).map(|(u, v)| u + v).collect(),
        q_x: a.q_x.iter().zip(&b.q_x).map(|(u, v)| u + v).collect(),
    }
}

fn roots_rec(e: &BundleExpr, names: &[(String, usize)], alph: Alphabets, bound: usize) -> Result<Vec<LinearForm>> {
    check_rank(e, bound)?;
    Ok(match e {
        BundleExpr::Base { name, rank } => {
            let first = names[0].0 == *name;
            (1..=*rank)
                .map(|i| {
                    if first {
                        LinearForm::subset_sum(alph, &[i], &[])
                    } else {
                        LinearForm::subset_sum(alph, &[], &[i])
                    }
                })
                .collect()
        }
        BundleExpr::DirectSum(a, b) => {
            let mut r = roots_rec(a, names, alph, bound)?;
            r.extend(roots_rec(b, names, alph, bound)?);
            r
        }
        BundleExpr::Tensor(a, b) => {
            let ra = roots_rec(a, names, alph, bound)?;
            let rb = roots_rec(b, names, alph, bound)?;
            ra.iter()
                .flat_map(|u| rb.iter().map(move |v| add_forms(u, v)))
                .collect()
        }
        BundleExpr::SchurFunctor(lambda, child) => {
            let rc = roots_rec(child, names, alph, bound)?;
            ssyt_enumerate(lambda, rc.len())
                .iter()
                .map(|t| {
                    t.entries()
                        .fold(LinearForm::zero(alph), |acc, v| add_forms(&acc, &rc[v - 1]))
                })
                .collect()
        }
    })
}
