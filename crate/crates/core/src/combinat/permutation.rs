use std::collections::BTreeSet;
use std::fmt;

use super::partition::Partition;

/// A permutation of `[n]` in one-line notation, values `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Option<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &w in &word {
            if w == 0 || w > n || seen[w - 1] {
                return None;
            }
            seen[w - 1] = true;
        }
        Some(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The adjacent transposition `s_i = (i, i+1)` in `S_n`, `1 <= i < n`.
    pub fn adjacent(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not in S_{n}");
        let mut word: Vec<usize> = (1..=n).collect();
        word.swap(i - 1, i);
        Permutation { word }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            word: other.word.iter().map(|&i| self.word[i - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.len()];
        for (i, &w) in self.word.iter().enumerate() {
            word[w - 1] = i + 1;
        }
        Permutation { word }
    }

    pub fn inversions(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i32 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `D(w) = { i : w(i) > w(i+1) }`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        (1..self.len()).filter(|&i| self.word[i - 1] > self.word[i]).collect()
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.word[i] - 1;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("sorted cycle lengths")
    }

    pub fn fixed_points(&self) -> usize {
        self.word.iter().enumerate().filter(|(i, &w)| w == i + 1).count()
    }

    /// A reduced word `[i_1, ..., i_k]` with `self = s_{i_1} ∘ ... ∘ s_{i_k}`,
    /// obtained by bubble sorting.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut u = self.word.clone();
        let mut sorted_by = Vec::new();
        loop {
            let Some(i) = (0..u.len().saturating_sub(1)).find(|&i| u[i] > u[i + 1]) else {
                break;
            };
            u.swap(i, i + 1);
            sorted_by.push(i + 1);
        }
        // self ∘ s_{j_1} ∘ ... ∘ s_{j_k} = id, so self = s_{j_k} ∘ ... ∘ s_{j_1}
        sorted_by.reverse();
        sorted_by
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() > 9 { " " } else { "" };
        let s: Vec<String> = self.word.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation { word: word.clone() });
        // next lexicographic permutation
        let Some(i) = (1..word.len()).rev().find(|&i| word[i - 1] < word[i]) else {
            break;
        };
        let j = (i..word.len()).rev().find(|&j| word[j] > word[i - 1]).unwrap();
        word.swap(i - 1, j);
        word[i..].reverse();
    }
    out
}

/// Fixed-point-free permutations of `[n]`, lexicographically.
pub fn derangements(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return vec![Permutation::identity(0)];
    }
    permutations(n).into_iter().filter(|w| w.fixed_points() == 0).collect()
}
