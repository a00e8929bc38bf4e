use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::combinat::{factorial, mn_character, partitions_of, permutations, z_factor, Partition, Permutation};
use crate::schurbasis::SchurVector;

/// A word of length `n` with `j` zeros and one copy each of `1, …, n − j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Positroid {
    word: Vec<usize>,
}

impl Positroid {
    pub fn new(word: Vec<usize>) -> Option<Self> {
        let zeros = word.iter().filter(|&&v| v == 0).count();
        let mut rest: Vec<usize> = word.iter().copied().filter(|&v| v != 0).collect();
        rest.sort_unstable();
        if rest.iter().enumerate().all(|(i, &v)| v == i + 1) && zeros + rest.len() == word.len() {
            Some(Positroid { word })
        } else {
            None
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn zeros(&self) -> usize {
        self.word.iter().filter(|&&v| v == 0).count()
    }

    /// `s_i . v` for 1-based `i`: swap positions `i, i+1`, negating when
    /// both letters are 0.
    pub fn apply_adjacent(&self, i: usize) -> (Positroid, i32) {
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        let sign = if self.word[i - 1] == 0 && self.word[i] == 0 { -1 } else { 1 };
        (Positroid { word }, sign)
    }
}

impl fmt::Display for Positroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.word.iter().any(|&v| v > 9) { "," } else { "" };
        let s: Vec<String> = self.word.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join(sep))
    }
}

/// All positroids of size `n`, grouped by number of zeros, each group in
/// lexicographic order.
pub fn positroid_enumerate(n: usize) -> Vec<Positroid> {
    let mut out = Vec::new();
    for j in 0..=n {
        let mut group = Vec::new();
        // choose the positions of the nonzero letters, then their order
        for perm in permutations(n - j) {
            for positions in subsets(n, n - j) {
                let mut word = vec![0; n];
                for (pos, &v) in positions.iter().zip(perm.word()) {
                    word[*pos] = v;
                }
                group.push(Positroid { word });
            }
        }
        group.sort();
        out.extend(group);
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `w . v` with its sign, where `w = s_{i_1} ⋯ s_{i_k}` is the
/// bubble-sort reduced word and the rightmost generator acts first.
pub fn positroid_act(w: &Permutation, v: &Positroid) -> (Positroid, i32) {
    assert_eq!(w.len(), v.len(), "permutation and positroid sizes differ");
    let mut cur = v.clone();
    let mut sign = 1;
    for &i in w.reduced_word().iter().rev() {
        let (next, s) = cur.apply_adjacent(i);
        cur = next;
        sign *= s;
    }
    (cur, sign)
}

/// A finite linear combination of positroids.
pub type SignedVector = BTreeMap<Positroid, BigInt>;

pub fn act_on_vector(w: &Permutation, v: &SignedVector) -> SignedVector {
    let mut out = SignedVector::new();
    for (p, c) in v {
        let (q, s) = positroid_act(w, p);
        *out.entry(q).or_default() += c * s;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// A permutation of cycle type `rho` made of consecutive cycles.
fn class_representative(rho: &Partition) -> Permutation {
    let n = rho.size();
    let mut word = vec![0; n];
    let mut start = 1;
    for &len in rho.parts() {
        for k in 0..len {
            let i = start + k;
            word[i - 1] = if k + 1 == len { start } else { i + 1 };
        }
        start += len;
    }
    Permutation::new(word).expect("cycles form a permutation")
}

/// The signed trace of a permutation of cycle type `rho` on `C[P_n]`.
pub fn positroid_character(rho: &Partition) -> BigInt {
    let w = class_representative(rho);
    positroid_enumerate(rho.size())
        .iter()
        .map(|v| {
            let (u, s) = positroid_act(&w, v);
            if &u == v {
                s
            } else {
                0
            }
        })
        .sum::<i32>()
        .into()
}

/// Frobenius characteristic of `C[P_n]` from its character:
/// `c_λ = (1/n!) Σ_ρ |C_ρ| χ(ρ) χ^λ(ρ)`.
pub fn positroid_frobenius(n: usize) -> SchurVector {
    let classes = partitions_of(n, n);
    let nfact = factorial(n);
    let weighted: Vec<(Partition, BigInt)> = classes
        .par_iter()
        .map(|rho| {
            let size = &nfact / z_factor(rho);
            (rho.clone(), positroid_character(rho) * size)
        })
        .collect();
    let terms = classes
        .par_iter()
        .map(|lambda| {
            let total: BigInt = weighted
                .iter()
                .map(|(rho, w)| w * mn_character(lambda, rho).expect("sizes agree"))
                .sum();
            let (c, r) = total.div_rem(&nfact);
            assert!(r.is_zero(), "character inner product is not integral");
            (lambda.clone(), c)
        })
        .collect::<Vec<_>>();
    SchurVector::from_terms(terms)
}
