use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinat::{binomial, Partition};
use crate::error::{Error, Result};
use crate::polyring::bareiss_det;

/// `det( C(λ_i + n − i, μ_j + n − j) )` for `1 ≤ i, j ≤ n`.
pub fn lascoux_det(lambda: &Partition, mu: &Partition, n: usize) -> BigInt {
    let l = lambda.padded(n.max(lambda.len()));
    let m = mu.padded(n.max(mu.len()));
    let matrix: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| binomial((l[i] + n - 1 - i) as i64, (m[j] + n - 1 - j) as i64))
                .collect()
        })
        .collect();
    bareiss_det(&matrix)
}

/// `det( C(n − i, μ_j − j + i) )` for `1 ≤ i, j ≤ n`.
pub fn binomial_det(mu: &Partition, n: usize) -> BigInt {
    let m = mu.padded(n.max(mu.len()));
    let matrix: Vec<Vec<BigInt>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| binomial((n - i) as i64, m[j - 1] as i64 - j as i64 + i as i64))
                .collect()
        })
        .collect();
    bareiss_det(&matrix)
}

/// `2^{|μ| − C(n,2)} · lascoux_det(δ_{n−1}, μ, n)`, the coefficient of
/// `s_μ` in `∏_{i<j}(1 + x_i + x_j)`. Errors if the power of two does not
/// divide.
pub fn normalized_lascoux_det(mu: &Partition, n: usize) -> Result<BigInt> {
    let d = lascoux_det(&Partition::staircase(n.saturating_sub(1)), mu, n);
    let shift = mu.size() as i64 - (n * n.saturating_sub(1) / 2) as i64;
    if shift >= 0 {
        return Ok(d << shift as usize);
    }
    let denom = BigInt::one() << (-shift) as usize;
    let (q, r) = d.div_rem(&denom);
    if !r.is_zero() {
        return Err(Error::InexactDivision);
    }
    Ok(q)
}
