use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial in `t` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TPoly {
    coeffs: Vec<BigInt>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// `c · t^d`.
    pub fn monomial(d: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    /// `[m]_t = 1 + t + … + t^{m−1}`.
    pub fn t_integer(m: usize) -> Self {
        Self::from_coeffs(vec![BigInt::one(); m])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Exact division by a polynomial with leading coefficient ±1.
    fn exact_div(&self, d: &TPoly) -> TPoly {
        let lead = d.coeffs.last().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            assert!(self.is_zero(), "inexact t-division");
            return TPoly::zero();
        }
        let mut q = vec![BigInt::zero(); rem.len() - d.coeffs.len() + 1];
        for i in (0..q.len()).rev() {
            let c = &rem[i + d.coeffs.len() - 1] / lead;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact t-division");
        TPoly::from_coeffs(q)
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, other: &TPoly) -> TPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        TPoly::from_coeffs((0..len).map(|i| self.coefficient(i) + other.coefficient(i)).collect())
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(out)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            let show_mag = !mag.is_one() || d == 0;
            match d {
                0 => write!(f, "{mag}")?,
                1 if show_mag => write!(f, "{mag}t")?,
                1 => write!(f, "t")?,
                _ if show_mag => write!(f, "{mag}t^{d}")?,
                _ => write!(f, "t^{d}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn t_factorial(m: usize) -> TPoly {
    (1..=m).fold(TPoly::one(), |acc, i| &acc * &TPoly::t_integer(i))
}

/// `[a choose b]_t`; zero unless `0 ≤ b ≤ a`.
pub fn t_binomial(a: i64, b: i64) -> TPoly {
    if a < 0 || b < 0 || b > a {
        return TPoly::zero();
    }
    let (a, b) = (a as usize, b as usize);
    t_factorial(a).exact_div(&(&t_factorial(b) * &t_factorial(a - b)))
}
