use std::fmt;

use serde::{Serialize, Serializer};

use crate::combinat::Partition;

/// A reverse flagged filling: rows strictly decrease, columns weakly
/// decrease, and row `i` (1-based) uses entries in `[1, flag − i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RFFilling {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    flag: usize,
}

impl RFFilling {
    /// Validates the filling conditions.
    pub fn new(rows: Vec<Vec<usize>>, flag: usize) -> Option<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect::<Vec<_>>()).ok()?;
        if shape.len() != rows.iter().filter(|r| !r.is_empty()).count() {
            return None;
        }
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        for (i, row) in rows.iter().enumerate() {
            let bound = flag.checked_sub(i + 1)?;
            if row.iter().any(|&e| e < 1 || e > bound) {
                return None;
            }
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return None;
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(b, a)| b > a) {
                return None;
            }
        }
        Some(RFFilling { shape, rows, flag })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn flag(&self) -> usize {
        self.flag
    }

    /// Number of entries equal to 1.
    pub fn ones(&self) -> usize {
        self.rows.iter().flatten().filter(|&&e| e == 1).count()
    }
}

impl Serialize for RFFilling {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl fmt::Display for RFFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "()");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Reverse flagged fillings of `μ` with flag `n` (row `i` in `[1, n − i]`).
pub fn rff_enumerate(mu: &Partition, n: usize) -> Vec<RFFilling> {
    rff_enumerate_flagged(mu, n)
}

/// Same enumeration with an explicit flag parameter.
pub fn rff_enumerate_flagged(mu: &Partition, flag: usize) -> Vec<RFFilling> {
    fn rec(
        mu: &Partition,
        flag: usize,
        row: usize,
        col: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<RFFilling>,
    ) {
        if col == mu.get(row) {
            if row + 1 == mu.len() {
                out.push(RFFilling {
                    shape: mu.clone(),
                    rows: rows.clone(),
                    flag,
                });
                return;
            }
            rows.push(Vec::new());
            rec(mu, flag, row + 1, 0, rows, out);
            rows.pop();
            return;
        }
        let cur = rows.len() - 1;
        let mut hi = flag - (row + 1);
        if col > 0 {
            hi = hi.min(rows[cur][col - 1] - 1);
        }
        if row > 0 {
            hi = hi.min(rows[cur - 1][col]);
        }
        // the rest of the row must still fit strictly below this entry
        let lo = mu.get(row) - col;
        for v in (lo..=hi).rev() {
            rows[cur].push(v);
            rec(mu, flag, row, col + 1, rows, out);
            rows[cur].pop();
        }
    }
    if (0..mu.len()).any(|i| mu.get(i) + i + 1 > flag) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new()];
    if mu.is_empty() {
        return vec![RFFilling {
            shape: mu.clone(),
            rows: Vec::new(),
            flag,
        }];
    }
    rec(mu, flag, 0, 0, &mut rows, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_inside;

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v)
    }

    #[test]
    fn n3_counts() {
        let counts: Vec<(Partition, usize)> = partitions_inside(&Partition::staircase(2))
            .into_iter()
            .map(|mu| {
                let c = rff_enumerate(&mu, 3).len();
                (mu, c)
            })
            .collect();
        assert_eq!(
            counts,
            vec![(p(&[]), 1), (p(&[1]), 2), (p(&[2]), 1), (p(&[1, 1]), 2), (p(&[2, 1]), 1)]
        );
        let all: Vec<String> = partitions_inside(&Partition::staircase(2))
            .iter()
            .flat_map(|mu| rff_enumerate(mu, 3))
            .map(|t| t.to_string())
            .collect();
        assert_eq!(all, ["()", "2", "1", "2 1", "2 / 1", "1 / 1", "2 1 / 1"]);
    }

    #[test]
    fn forced_and_tiny() {
        assert_eq!(rff_enumerate(&p(&[1]), 2).len(), 1);
        assert_eq!(rff_enumerate(&p(&[1]), 2)[0].rows(), &[vec![1]]);
        for n in 1..=6 {
            let fs = rff_enumerate(&Partition::staircase(n - 1), n);
            assert_eq!(fs.len(), 1);
            let want: Vec<Vec<usize>> = (1..n).map(|i| (1..=n - i).rev().collect()).collect();
            assert_eq!(fs[0].rows(), want.as_slice());
        }
        assert!(rff_enumerate(&p(&[3]), 3).is_empty());
    }

    #[test]
    fn validation_agrees_with_enumeration() {
        for mu in partitions_inside(&Partition::staircase(3)) {
            for t in rff_enumerate(&mu, 4) {
                assert_eq!(RFFilling::new(t.rows().to_vec(), 4), Some(t));
            }
        }
        assert!(RFFilling::new(vec![vec![1, 2]], 4).is_none());
        assert!(RFFilling::new(vec![vec![1], vec![2]], 4).is_none());
        assert!(RFFilling::new(vec![vec![3]], 3).is_none());
    }

    #[test]
    fn json_rows() {
        let t = RFFilling::new(vec![vec![2, 1], vec![1]], 3).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[2,1],[1]]");
    }
}
