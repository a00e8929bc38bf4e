use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{permutations, ssyt_enumerate, Partition};
use crate::polyring::{Alphabets, Monomial, MultiPoly};

type Memo = RwLock<HashMap<(Partition, usize), Arc<MultiPoly>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `Δ_n = ∏_{i<j} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> MultiPoly {
    let a = Alphabets::single(n);
    let mut v = MultiPoly::one(a);
    for i in 1..=n {
        for j in i + 1..=n {
            v = &v * &(&MultiPoly::x(a, i) - &MultiPoly::x(a, j));
        }
    }
    v
}

fn vandermonde_cached(n: usize) -> Arc<MultiPoly> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<MultiPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(&n) {
        return v.clone();
    }
    let v = Arc::new(vandermonde(n));
    cache.write().unwrap().entry(n).or_insert(v).clone()
}

/// `A_n(f) = Δ_n^{-1} Σ_w sign(w) (w.f)`. The signed sum is always divisible
/// by `Δ_n`, so the division is exact.
pub fn antisymmetrize(f: &MultiPoly, n: usize) -> MultiPoly {
    assert_eq!(f.alphabets().x, n, "antisymmetrize expects a polynomial in X_{n}");
    let mut signed = MultiPoly::zero(f.alphabets());
    for w in permutations(n) {
        let moved = f.permute_x(w.word());
        signed = if w.sign() > 0 { &signed + &moved } else { &signed - &moved };
    }
    let delta = vandermonde_cached(n).embed(f.alphabets());
    signed
        .exact_divide(&delta)
        .expect("alternating polynomials are divisible by the Vandermonde product")
}

/// The Schur polynomial `s_λ(X_n)` via the bialternant formula
/// `A_n(x^{λ+δ})`. Results are memoized per `(λ, n)`.
pub fn schur_poly(lambda: &Partition, n: usize) -> Arc<MultiPoly> {
    let key = (lambda.clone(), n);
    if let Some(p) = memo().read().unwrap().get(&key) {
        return p.clone();
    }
    let p = Arc::new(bialternant(lambda, n));
    memo().write().unwrap().entry(key).or_insert(p).clone()
}

fn bialternant(lambda: &Partition, n: usize) -> MultiPoly {
    let a = Alphabets::single(n);
    if lambda.len() > n {
        return MultiPoly::zero(a);
    }
    let shifted: Vec<u16> = lambda
        .padded(n)
        .iter()
        .enumerate()
        .map(|(i, &p)| (p + n - 1 - i) as u16)
        .collect();
    let mono = MultiPoly::from_terms(a, [(Monomial::from_exps(0, &shifted), BigInt::one())]);
    antisymmetrize(&mono, n)
}

/// `s_λ(X_n)` as the generating function of semistandard tableaux with
/// entries at most `n`. Independent of [`schur_poly`].
pub fn schur_poly_by_tableaux(lambda: &Partition, n: usize) -> MultiPoly {
    let a = Alphabets::single(n);
    let mut p = MultiPoly::zero(a);
    for t in ssyt_enumerate(lambda, n) {
        let exps: Vec<u16> = t.content(n).iter().map(|&c| c as u16).collect();
        p.add_term(Monomial::from_exps(0, &exps), BigInt::one());
    }
    p
}
