use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of zero.
///
/// Ordering is graded lexicographic: first by size, then by parts in
/// lexicographically *descending* order, so `(2)` sorts before `(1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::OutOfRange(format!(
                "{parts:?} is not a weakly decreasing sequence"
            )));
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] but panics on invalid input. Intended for
    /// literals.
    pub fn from_parts(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(n, n-1, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        Partition {
            parts: (1..=n).rev().collect(),
        }
    }

    /// `(1^n)`
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            Self::empty()
        } else {
            Partition {
                parts: vec![cols; rows],
            }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts zero-padded to length `n`. Panics if the partition is longer.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(self.len() <= n, "partition {self} has more than {n} parts");
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    pub fn conjugate(&self) -> Self {
        let width = self.get(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.parts[i] <= self.parts[i])
    }

    pub fn intersection(&self, other: &Partition) -> Self {
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| *a.min(b))
            .filter(|&p| p > 0)
            .collect();
        Partition { parts }
    }

    /// Number of standard tableaux of this shape, by the hook length formula.
    pub fn num_standard(&self) -> BigInt {
        let conj = self.conjugate();
        let mut hooks = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks *= (row - j - 1) + (conj.parts[j] - i - 1) + 1;
            }
        }
        factorial(self.size()) / hooks
    }

    /// Parses `[2,1]`, `(2,1)` or `2,1`; `[]` and the empty string give the empty
    /// partition.
    pub fn parse(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')'])
            .trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::Parse {
                    pos: 0,
                    expected: format!("nonnegative integer, found {t:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(a, b)`, zero unless `0 ≤ b ≤ a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    (0..b).fold(BigInt::one(), |acc, i| acc * (a - i) / (i + 1))
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions `μ` with `μ_i <= bound_i` for every `i`, sorted in
/// graded lexicographic order.
pub fn partitions_inside(bound: &Partition) -> Vec<Partition> {
    fn rec(bound: &Partition, row: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone() });
        if row >= bound.len() {
            return;
        }
        let hi = cap.min(bound.get(row));
        for p in 1..=hi {
            cur.push(p);
            rec(bound, row + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(bound, 0, usize::MAX, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions of `n` with at most `max_len` parts, in graded lexicographic
/// order (lexicographically descending).
pub fn partitions_of(n: usize, max_len: usize) -> Vec<Partition> {
    fn rec(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_len, &mut Vec::new(), &mut out);
    out
}

/// All `λ` with `μ ⊆ λ ⊆ inside`, `|λ/μ| = r` and at most one box of
/// `λ/μ` in each row.
pub fn vertical_strip_extensions(mu: &Partition, r: usize, inside: &Partition) -> Vec<Partition> {
    fn rec(
        mu: &Partition,
        inside: &Partition,
        row: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == inside.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip stays a partition"));
            }
            return;
        }
        let rows_left = inside.len() - row;
        if left > rows_left {
            return;
        }
        let base = mu.get(row);
        let prev = if row == 0 { usize::MAX } else { cur[row - 1] };
        for add in [0usize, 1] {
            let v = base + add;
            if add > left || v > inside.get(row) || v > prev {
                continue;
            }
            cur.push(v);
            rec(mu, inside, row + 1, left - add, cur, out);
            cur.pop();
        }
    }
    if !inside.contains(mu) {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(mu, inside, 0, r, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All `λ ⊇ μ` with `|λ/μ| = r` and at most one box of `λ/μ` in each
/// column, optionally restricted to at most `max_len` rows.
pub fn horizontal_strip_extensions(mu: &Partition, r: usize, max_len: Option<usize>) -> Vec<Partition> {
    if max_len.is_some_and(|m| mu.len() > m) {
        return Vec::new();
    }
    let rows = mu.len() + 1;
    let rows = max_len.map_or(rows, |m| rows.min(m));
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn rec(mu: &Partition, rows: usize, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == rows {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip stays a partition"));
            }
            return;
        }
        let base = mu.get(row);
        let cap = if row == 0 { base + left } else { mu.get(row - 1).min(base + left) };
        for v in base..=cap {
            cur.push(v);
            rec(mu, rows, row + 1, left - (v - base), cur, out);
            cur.pop();
        }
    }
    if rows == 0 {
        if r == 0 {
            out.push(mu.clone());
        }
        return out;
    }
    rec(mu, rows, 0, r, &mut cur, &mut out);
    out.sort();
    out
}
