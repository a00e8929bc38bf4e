use std::collections::BTreeSet;

use serde::Serialize;

use super::partition::{partitions_of, Partition};

/// A filling of a Young diagram by positive integers, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    #[serde(skip)]
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Wraps rows without checking semistandardness.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        let shape = Partition::new(rows.iter().map(Vec::len).collect::<Vec<_>>())
            .expect("row lengths must weakly decrease");
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        rows_ok && cols_ok && self.entries().all(|e| e > 0)
    }

    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<usize> = self.entries().collect();
        seen.sort_unstable();
        self.is_semistandard() && seen.iter().enumerate().all(|(i, &e)| e == i + 1)
    }

    /// Multiplicity of each entry value `1..=n` (index 0 is value 1).
    pub fn content(&self, n: usize) -> Vec<u32> {
        let mut c = vec![0u32; n];
        for e in self.entries() {
            c[e - 1] += 1;
        }
        c
    }

    /// Row index (0-based) holding each value of a standard tableau, indexed
    /// by `value - 1`.
    fn rows_of_values(&self) -> Vec<usize> {
        let n = self.shape.size();
        let mut at = vec![0; n];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                at[e - 1] = r;
            }
        }
        at
    }

    /// Descents of a standard tableau: `i` such that `i+1` lies in a strictly
    /// lower row than `i`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let at = self.rows_of_values();
        (1..at.len()).filter(|&i| at[i] > at[i - 1]).collect()
    }

    pub fn major_index(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// Ascents among `1..n-1` (non-descents); `n` itself is never included.
    pub fn ascent_set(&self) -> BTreeSet<usize> {
        let des = self.descent_set();
        (1..self.shape.size()).filter(|i| !des.contains(i)).collect()
    }

    /// Least ascent, where `n` always counts as an ascent.
    pub fn smallest_ascent(&self) -> usize {
        let n = self.shape.size();
        let at = self.rows_of_values();
        (1..n).find(|&i| at[i] <= at[i - 1]).unwrap_or(n)
    }
}

/// Every semistandard tableau of `shape` with entries at most `max_entry`,
/// in lexicographic order of the row-reading word.
pub fn ssyt_enumerate(shape: &Partition, max_entry: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.len() > max_entry {
        return out;
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let conj = shape.conjugate();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        conj: &Partition,
        max_entry: usize,
        rows: &mut Vec<Vec<usize>>,
        shape: &Partition,
        out: &mut Vec<Tableau>,
    ) {
        let Some(&(r, c)) = cells.get(idx) else {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        };
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        let lo = left.max(above);
        // room for the strictly increasing entries below in this column
        let below = conj.get(c) - r - 1;
        let hi = max_entry.saturating_sub(below);
        for v in lo..=hi {
            rows[r][c] = v;
            rec(idx + 1, cells, conj, max_entry, rows, shape, out);
        }
    }
    rec(0, &cells, &conj, max_entry, &mut rows, shape, &mut out);
    out
}

/// Standard tableaux of a fixed shape.
pub fn syt_of_shape(shape: &Partition) -> Vec<Tableau> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    fn rec(k: usize, n: usize, shape: &Partition, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if k > n {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..rows.len() {
            let len = rows[r].len();
            let fits = len < shape.get(r) && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(k);
                rec(k + 1, n, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(1, n, shape, &mut rows, &mut out);
    out
}

/// A standard tableau together with its descent statistics.
#[derive(Clone, Debug)]
pub struct SytStats {
    pub tableau: Tableau,
    pub maj: usize,
    pub des: usize,
    pub descents: BTreeSet<usize>,
    pub ascents: BTreeSet<usize>,
}

impl SytStats {
    pub fn shape(&self) -> &Partition {
        self.tableau.shape()
    }
}

/// All standard tableaux with `n` boxes, grouped by shape in graded
/// lexicographic order. `SYT(0)` is the single empty tableau.
pub fn syt_enumerate(n: usize) -> Vec<SytStats> {
    partitions_of(n, n)
        .iter()
        .flat_map(|shape| syt_of_shape(shape))
        .map(|t| {
            let descents = t.descent_set();
            SytStats {
                maj: descents.iter().sum(),
                des: descents.len(),
                ascents: t.ascent_set(),
                descents,
                tableau: t,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v)
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(ssyt_enumerate(&p(&[2, 1]), 3).len(), 8);
        assert_eq!(ssyt_enumerate(&p(&[1]), 1).len(), 1);
        assert_eq!(ssyt_enumerate(&p(&[3, 1]), 2).len(), 3);
        assert!(ssyt_enumerate(&p(&[1, 1, 1]), 2).is_empty());
        assert_eq!(ssyt_enumerate(&p(&[]), 0).len(), 1);
    }

    #[test]
    fn ssyt_are_distinct_semistandard_and_sorted() {
        let all = ssyt_enumerate(&p(&[2, 2, 1]), 4);
        assert!(all.iter().all(Tableau::is_semistandard));
        let words: Vec<Vec<usize>> = all.iter().map(|t| t.entries().collect()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(words, sorted);
    }

    #[test]
    fn figure_tableau_statistics() {
        let t = Tableau::from_rows(vec![vec![1, 2, 5], vec![3, 4, 6], vec![7]]);
        assert!(t.is_standard());
        assert_eq!(t.descent_set().into_iter().collect::<Vec<_>>(), vec![2, 5, 6]);
        assert_eq!(t.major_index(), 13);
    }

    #[test]
    fn syt3_major_indices() {
        let stats = syt_enumerate(3);
        let got: Vec<(Partition, usize)> = stats.iter().map(|s| (s.shape().clone(), s.maj)).collect();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        assert_eq!(
            got_sorted,
            vec![(p(&[3]), 0), (p(&[2, 1]), 1), (p(&[2, 1]), 2), (p(&[1, 1, 1]), 3)]
        );
        let one = syt_enumerate(1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].maj, 0);
        let zero = syt_enumerate(0);
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].maj, 0);
    }

    #[test]
    fn smallest_ascents() {
        assert_eq!(Tableau::from_rows(vec![vec![1], vec![2]]).smallest_ascent(), 2);
        assert_eq!(Tableau::from_rows(vec![vec![1, 2]]).smallest_ascent(), 1);
        assert_eq!(Tableau::from_rows(vec![vec![1, 3], vec![2]]).smallest_ascent(), 2);
    }

    #[test]
    fn syt_counts_match_hook_lengths() {
        for n in 0..=7 {
            for shape in partitions_of(n, n) {
                assert_eq!(
                    num_bigint::BigInt::from(syt_of_shape(&shape).len()),
                    shape.num_standard(),
                    "{shape}"
                );
            }
        }
    }
}
