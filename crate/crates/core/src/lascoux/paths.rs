use std::collections::HashSet;

use serde::Serialize;

use super::fillings::RFFilling;
use crate::combinat::Partition;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Step {
    North,
    East,
}

/// `n` lattice paths, path `i` running from `p_i = (2i − 2, n − i)` to
/// `q_i = (n + i − μ_i − 2, n − i + μ_i)`, stored as steps from `p_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PathFamily {
    pub n: usize,
    pub mu: Partition,
    pub paths: Vec<Vec<Step>>,
}

impl PathFamily {
    /// `p_i` for 1-based `i`.
    pub fn start(n: usize, i: usize) -> (i64, i64) {
        (2 * i as i64 - 2, (n - i) as i64)
    }

    /// `q_i` for 1-based `i`.
    pub fn end(n: usize, mu: &Partition, i: usize) -> (i64, i64) {
        let m = mu.get(i - 1) as i64;
        ((n + i) as i64 - m - 2, (n - i) as i64 + m)
    }

    /// Lattice points visited by path `i` (1-based), starting at `p_i`.
    pub fn points(&self, i: usize) -> Vec<(i64, i64)> {
        walk(Self::start(self.n, i), &self.paths[i - 1])
    }

    /// Checks endpoints, step counts and that no lattice point is shared.
    pub fn is_valid(&self) -> bool {
        if self.paths.len() != self.n {
            return false;
        }
        let mut seen = HashSet::new();
        for i in 1..=self.n {
            let pts = self.points(i);
            if self.paths[i - 1].len() != self.n - i || pts.last() != Some(&Self::end(self.n, &self.mu, i)) {
                return false;
            }
            if !pts.into_iter().all(|pt| seen.insert(pt)) {
                return false;
            }
        }
        true
    }
}

fn walk(start: (i64, i64), steps: &[Step]) -> Vec<(i64, i64)> {
    let mut pts = Vec::with_capacity(steps.len() + 1);
    let mut at = start;
    pts.push(at);
    for s in steps {
        match s {
            Step::North => at.1 += 1,
            Step::East => at.0 += 1,
        }
        pts.push(at);
    }
    pts
}

/// Paths of `len` steps with `north` north steps.
fn all_paths(len: usize, north: usize) -> Vec<Vec<Step>> {
    fn rec(len: usize, north: usize, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let used = cur.iter().filter(|&&s| s == Step::North).count();
        let left = len - cur.len();
        if used < north {
            cur.push(Step::North);
            rec(len, north, cur, out);
            cur.pop();
        }
        if north - used < left {
            cur.push(Step::East);
            rec(len, north, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if north <= len {
        rec(len, north, &mut Vec::new(), &mut out);
    }
    out
}

/// All nonintersecting families for `μ`.
pub fn gv_enumerate(mu: &Partition, n: usize) -> Vec<PathFamily> {
    fn rec(
        n: usize,
        mu: &Partition,
        options: &[Vec<(Vec<Step>, Vec<(i64, i64)>)>],
        i: usize,
        used: &mut HashSet<(i64, i64)>,
        chosen: &mut Vec<Vec<Step>>,
        out: &mut Vec<PathFamily>,
    ) {
        if i == n {
            out.push(PathFamily {
                n,
                mu: mu.clone(),
                paths: chosen.clone(),
            });
            return;
        }
        for (steps, pts) in &options[i] {
            if pts.iter().any(|pt| used.contains(pt)) {
                continue;
            }
            used.extend(pts.iter().copied());
            chosen.push(steps.clone());
            rec(n, mu, options, i + 1, used, chosen, out);
            chosen.pop();
            for pt in pts {
                used.remove(pt);
            }
        }
    }
    if mu.len() > n || (0..mu.len()).any(|i| mu.get(i) > n - i - 1) {
        return Vec::new();
    }
    let options: Vec<Vec<(Vec<Step>, Vec<(i64, i64)>)>> = (1..=n)
        .map(|i| {
            all_paths(n - i, mu.get(i - 1))
                .into_iter()
                .map(|steps| {
                    let pts = walk(PathFamily::start(n, i), &steps);
                    (steps, pts)
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    rec(n, mu, &options, 0, &mut HashSet::new(), &mut Vec::new(), &mut out);
    out
}

/// Row `i` of the filling is the set of labels on the north steps of path
/// `i`, where edges are labelled `1, 2, …` starting from `q_i`.
pub fn gv_to_filling(fam: &PathFamily) -> RFFilling {
    let rows: Vec<Vec<usize>> = fam
        .paths
        .iter()
        .map(|steps| {
            let len = steps.len();
            // the step at forward index k carries label len − k; labels descend
            steps
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == Step::North)
                .map(|(k, _)| len - k)
                .collect()
        })
        .collect();
    let rows: Vec<Vec<usize>> = rows.into_iter().take_while(|r| !r.is_empty()).collect();
    RFFilling::new(rows, fam.n).expect("nonintersecting families give reverse flagged fillings")
}

/// Inverse of [`gv_to_filling`].
pub fn gv_from_filling(t: &RFFilling) -> PathFamily {
    let n = t.flag();
    let paths = (1..=n)
        .map(|i| {
            let len = n - i;
            let row = t.rows().get(i - 1).map(Vec::as_slice).unwrap_or(&[]);
            (0..len)
                .map(|k| if row.contains(&(len - k)) { Step::North } else { Step::East })
                .collect()
        })
        .collect();
    PathFamily {
        n,
        mu: t.shape().clone(),
        paths,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_inside;
    use crate::lascoux::{binomial_det, rff_enumerate};
    use num_bigint::BigInt;
    use Step::{East as E, North as N};

    #[test]
    fn empty_shape_is_all_east() {
        let fams = gv_enumerate(&Partition::empty(), 4);
        assert_eq!(fams.len(), 1);
        assert!(fams[0].paths.iter().flatten().all(|&s| s == E));
        assert!(gv_to_filling(&fams[0]).rows().is_empty());
    }

    #[test]
    fn drawn_family_n5() {
        let mu = Partition::from_parts(&[2, 2, 1, 1]);
        let fam = PathFamily {
            n: 5,
            mu: mu.clone(),
            paths: vec![vec![E, N, E, N], vec![N, E, N], vec![E, N], vec![N], vec![]],
        };
        assert!(fam.is_valid());
        assert_eq!(PathFamily::start(5, 1), (0, 4));
        assert_eq!(PathFamily::end(5, &mu, 1), (2, 6));
        assert!(gv_enumerate(&mu, 5).contains(&fam));
        let t = gv_to_filling(&fam);
        assert_eq!(t.rows(), &[vec![3, 1], vec![3, 1], vec![1], vec![1]]);
        assert_eq!(gv_from_filling(&t), fam);
    }

    #[test]
    fn counts_and_round_trips() {
        assert_eq!(gv_enumerate(&Partition::from_parts(&[1]), 3).len(), 2);
        for n in 1..=5 {
            for mu in partitions_inside(&Partition::staircase(n - 1)) {
                let fams = gv_enumerate(&mu, n);
                assert_eq!(BigInt::from(fams.len()), binomial_det(&mu, n));
                let mut fills: Vec<RFFilling> = fams
                    .iter()
                    .map(|f| {
                        assert!(f.is_valid());
                        let t = gv_to_filling(f);
                        assert_eq!(&gv_from_filling(&t), f);
                        t
                    })
                    .collect();
                fills.sort();
                let mut direct = rff_enumerate(&mu, n);
                direct.sort();
                assert_eq!(fills, direct);
            }
        }
    }
}
