use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::Partition;

/// Memoized Kostka numbers `K_{λ,μ}`: the number of semistandard tableaux
/// of shape `λ` and content `μ`.
///
/// Computed by stripping the largest entry, which occupies a horizontal
/// strip of size `μ_last`. Sub-results are shared across contents with a
/// common prefix.
#[derive(Default)]
pub struct KostkaTable {
    memo: HashMap<(Partition, Partition), BigInt>,
}

impl KostkaTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, lambda: &Partition, mu: &Partition) -> BigInt {
        if lambda.size() != mu.size() || !dominates(lambda, mu) {
            return BigInt::zero();
        }
        if mu.len() <= 1 {
            // a single row of one value, or the empty filling
            return BigInt::one();
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let r = mu.get(mu.len() - 1);
        let prefix = Partition::new(mu.parts()[..mu.len() - 1].to_vec()).expect("prefix of a partition");
        let mut total = BigInt::zero();
        for inner in horizontal_strip_removals(lambda, r) {
            total += self.get(&inner, &prefix);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// Dominance `λ ⊵ μ` for partitions of equal size.
fn dominates(lambda: &Partition, mu: &Partition) -> bool {
    if lambda.len() > mu.len() {
        return false;
    }
    let mut a = 0;
    let mut b = 0;
    for i in 0..mu.len() {
        a += lambda.get(i);
        b += mu.get(i);
        if a < b {
            return false;
        }
    }
    true
}

/// All `κ ⊆ λ` with `λ/κ` a horizontal strip of size `r`.
fn horizontal_strip_removals(lambda: &Partition, r: usize) -> Vec<Partition> {
    fn rec(lambda: &Partition, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == lambda.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip removal keeps a partition"));
            }
            return;
        }
        let top = lambda.get(row);
        let floor = lambda.get(row + 1);
        // at most λ_row boxes remain removable from this row and those below
        if top < left {
            return;
        }
        for take in 0..=(top - floor).min(left) {
            cur.push(top - take);
            rec(lambda, row + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, r, &mut Vec::with_capacity(lambda.len()), &mut out);
    out
}
