use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::Partition;
use crate::error::{Error, Result};

/// Irreducible character value `χ^λ(ρ)` of the symmetric group, by the
/// Murnaghan–Nakayama rule on beta-sets.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            lambda: lambda.clone(),
            rho: rho.clone(),
            left: lambda.size(),
            right: rho.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda, rho.parts(), &mut memo))
}

fn mn_rec(lambda: &Partition, rho: &[usize], memo: &mut HashMap<(Partition, usize), BigInt>) -> BigInt {
    let Some((&r, rest)) = rho.split_first() else {
        return BigInt::one();
    };
    let key = (lambda.clone(), rho.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let len = lambda.len();
    // beta-set with exactly `len` beads
    let beta: Vec<usize> = (0..len).map(|i| lambda.get(i) + len - 1 - i).collect();
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved.iter().enumerate().map(|(i, &c)| c - (len - 1 - i)).collect();
        let smaller = Partition::new(parts).expect("rim hook removal keeps a partition");
        let v = mn_rec(&smaller, rest, memo);
        if between % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `z_ρ = ∏ i^{m_i} m_i!`, so that the class of cycle type `ρ` has
/// `n!/z_ρ` elements.
pub fn z_factor(rho: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut i = 0;
    let parts = rho.parts();
    while i < parts.len() {
        let part = parts[i];
        let mut m = 0;
        while i < parts.len() && parts[i] == part {
            m += 1;
            i += 1;
            z *= part * m;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partition::partitions_of;
    use crate::combinat::permutation::permutations;

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v)
    }

    #[test]
    fn spot_values() {
        for rho in partitions_of(4, 4) {
            assert_eq!(mn_character(&p(&[4]), &rho).unwrap(), BigInt::one());
        }
        assert_eq!(mn_character(&p(&[1, 1]), &p(&[2])).unwrap(), BigInt::from(-1));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), BigInt::from(-1));
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[2, 2])).unwrap(), BigInt::from(2));
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn degrees_match_hook_lengths() {
        for n in 0..=6 {
            let id = Partition::column(n);
            for lambda in partitions_of(n, n) {
                assert_eq!(mn_character(&lambda, &id).unwrap(), lambda.num_standard());
            }
        }
    }

    #[test]
    fn column_orthogonality_and_class_sizes() {
        for n in 1..=6usize {
            let shapes = partitions_of(n, n);
            let nfact: BigInt = (1..=n).product::<usize>().into();
            let class_total: BigInt = shapes.iter().map(|rho| &nfact / z_factor(rho)).sum();
            assert_eq!(class_total, nfact);
            // sum over classes of |C| χ^λ χ^μ = n! δ
            for a in &shapes {
                for b in &shapes {
                    let s: BigInt = shapes
                        .iter()
                        .map(|rho| {
                            &nfact / z_factor(rho)
                                * mn_character(a, rho).unwrap()
                                * mn_character(b, rho).unwrap()
                        })
                        .sum();
                    let expect = if a == b { nfact.clone() } else { BigInt::zero() };
                    assert_eq!(s, expect, "{a} {b}");
                }
            }
        }
        // class sizes agree with counting permutations directly
        let mut counts: HashMap<Partition, usize> = HashMap::new();
        for w in permutations(5) {
            *counts.entry(w.cycle_type()).or_default() += 1;
        }
        for (rho, c) in counts {
            assert_eq!(BigInt::from(120) / z_factor(&rho), BigInt::from(c));
        }
    }
}
