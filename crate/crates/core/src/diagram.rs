//! Path diagrams: arrows of a path placed at arbitrary starting ranks, one per
//! column, together with their per-row segment counts.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArrowColor {
    /// Up step, `b > 0`.
    Red,
    /// Down step, `b < 0`.
    Blue,
    /// Level step, `b = 0`. Has no segments.
    Purple,
}

impl ArrowColor {
    pub fn of(step: i64) -> Self {
        match step {
            b if b > 0 => ArrowColor::Red,
            b if b < 0 => ArrowColor::Blue,
            _ => ArrowColor::Purple,
        }
    }
}

/// Arrow `i` (0-based column) is the vector `(1, steps[i])` starting at
/// `(i, ranks[i])`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathDiagram {
    steps: Vec<i64>,
    ranks: Vec<i64>,
}

impl PathDiagram {
    pub fn new(steps: Vec<i64>, ranks: Vec<i64>) -> Result<Self> {
        if steps.len() != ranks.len() {
            return Err(Error::LengthMismatch {
                steps: steps.len(),
                ranks: ranks.len(),
            });
        }
        Ok(Self { steps, ranks })
    }

    pub(crate) fn from_parts_unchecked(steps: Vec<i64>, ranks: Vec<i64>) -> Self {
        debug_assert_eq!(steps.len(), ranks.len());
        Self { steps, ranks }
    }

    /// The minimal positive diagram of `path`: `r_1 = max(0, -b_1)` and
    /// `r_{i+1} = max(r_i, -b_{i+1})`.
    pub fn minimal(path: &Path) -> Self {
        let mut ranks = Vec::with_capacity(path.len());
        let mut r = 0;
        for &b in path.steps() {
            r = r.max(-b);
            ranks.push(r);
        }
        Self::from_parts_unchecked(path.steps().to_vec(), ranks)
    }

    pub fn steps(&self) -> &[i64] {
        &self.steps
    }

    pub fn ranks(&self) -> &[i64] {
        &self.ranks
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end_rank(&self, i: usize) -> i64 {
        self.ranks[i] + self.steps[i]
    }

    pub fn color(&self, i: usize) -> ArrowColor {
        ArrowColor::of(self.steps[i])
    }

    /// The V-path: same steps, reconnected by vertical shifts.
    pub fn vpath(&self) -> Path {
        Path::new(self.steps.clone())
    }

    pub fn with_ranks(&self, ranks: Vec<i64>) -> Result<Self> {
        Self::new(self.steps.clone(), ranks)
    }

    pub(crate) fn ranks_mut(&mut self) -> &mut [i64] {
        &mut self.ranks
    }

    pub fn is_increasing(&self) -> bool {
        self.ranks.windows(2).all(|w| w[0] <= w[1])
    }

    /// Increasing, with every start and end rank non-negative.
    pub fn is_positive(&self) -> bool {
        self.is_increasing()
            && self.ranks.first().is_none_or(|&r| r >= 0)
            && (0..self.len()).all(|i| self.end_rank(i) >= 0)
    }

    pub fn row_counts(&self) -> RowCounts {
        let mut counts = RowCounts::default();
        for (&b, &r) in self.steps.iter().zip(&self.ranks) {
            if b > 0 {
                for row in r..r + b {
                    counts.rows.entry(row).or_default().red += 1;
                }
            } else if b < 0 {
                for row in r + b..r {
                    counts.rows.entry(row).or_default().blue += 1;
                }
            }
        }
        counts
    }

    pub fn is_balanced(&self) -> bool {
        self.row_counts().is_balanced()
    }

    /// `c(j) - c(j-1)` together with the number of arrows starting and
    /// ending at level `j`.
    pub fn row_count_delta(&self, j: i64) -> RowDelta {
        let counts = self.row_counts();
        let starts = self.ranks.iter().filter(|&&r| r == j).count();
        let ends = (0..self.len()).filter(|&i| self.end_rank(i) == j).count();
        RowDelta {
            delta: counts.count(j) - counts.count(j - 1),
            starts_at_j: starts,
            ends_at_j: ends,
        }
    }

    /// Highest level touched by any arrow, or `None` for the empty diagram.
    pub fn max_level(&self) -> Option<i64> {
        (0..self.len()).map(|i| self.ranks[i].max(self.end_rank(i))).max()
    }

    pub fn min_level(&self) -> Option<i64> {
        (0..self.len()).map(|i| self.ranks[i].min(self.end_rank(i))).min()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowDelta {
    pub delta: i64,
    pub starts_at_j: usize,
    pub ends_at_j: usize,
}

impl RowDelta {
    /// Whether `delta = starts - ends` holds.
    pub fn is_consistent(&self) -> bool {
        self.delta == self.starts_at_j as i64 - self.ends_at_j as i64
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RowCount {
    pub red: u64,
    pub blue: u64,
}

impl RowCount {
    pub fn count(&self) -> i64 {
        self.red as i64 - self.blue as i64
    }
}

/// Sparse per-row segment counts. Rows absent from the map are empty.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RowCounts {
    rows: BTreeMap<i64, RowCount>,
}

impl RowCounts {
    pub fn get(&self, row: i64) -> RowCount {
        self.rows.get(&row).copied().unwrap_or_default()
    }

    pub fn red(&self, row: i64) -> u64 {
        self.get(row).red
    }

    pub fn blue(&self, row: i64) -> u64 {
        self.get(row).blue
    }

    /// `c(j) = red(j) - blue(j)`.
    pub fn count(&self, row: i64) -> i64 {
        self.get(row).count()
    }

    /// Rows carrying at least one segment, in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, RowCount)> + '_ {
        self.rows.iter().map(|(&j, &c)| (j, c))
    }

    pub fn is_balanced(&self) -> bool {
        self.rows.values().all(|c| c.count() == 0)
    }

    pub fn total(&self) -> i64 {
        self.rows.values().map(RowCount::count).sum()
    }

    pub fn lowest_positive(&self) -> Option<i64> {
        self.rows.iter().find(|(_, c)| c.count() > 0).map(|(&j, _)| j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> PathDiagram {
        PathDiagram::new(vec![2, 2, 2, 0, -1, 3, 0, -4, -4], vec![1, 4, 0, 3, 2, 4, 6, 4, 5]).unwrap()
    }

    /// Per-cell tally that does not share code with `row_counts`.
    fn tally(d: &PathDiagram, row: i64) -> i64 {
        let mut c = 0;
        for i in 0..d.len() {
            let (lo, hi) = (d.ranks()[i].min(d.end_rank(i)), d.ranks()[i].max(d.end_rank(i)));
            if lo <= row && row < hi {
                c += d.steps()[i].signum();
            }
        }
        c
    }

    #[test]
    fn sample_row_counts() {
        let d = sample();
        let counts = d.row_counts();
        let got: Vec<i64> = (0..=6).map(|j| counts.count(j)).collect();
        let oracle: Vec<i64> = (0..=6).map(|j| tally(&d, j)).collect();
        assert_eq!(oracle, vec![0, -1, -1, -2, 1, 2, 1]);
        assert_eq!(got, oracle);
        assert_eq!(counts.count(7), 0);
        assert_eq!(counts.count(-1), 0);
        assert!(!d.is_balanced());
    }

    #[test]
    fn trivial_row_counts() {
        let d = PathDiagram::new(vec![1, -1], vec![0, 1]).unwrap();
        let c = d.row_counts();
        assert_eq!(c.get(0), RowCount { red: 1, blue: 1 });
        assert_eq!(c.count(0), 0);
        assert!(d.is_balanced());

        let d = PathDiagram::new(vec![0], vec![5]).unwrap();
        assert_eq!(d.row_counts().iter().count(), 0);
        assert!(PathDiagram::default().is_balanced());
    }

    #[test]
    fn balanced_example() {
        let d = PathDiagram::new(vec![2, 0, 2, -3, 1, -2], vec![0, 0, 2, 3, 4, 5]).unwrap();
        assert!(d.is_balanced());
        assert!(d.is_increasing());
        assert!(d.is_positive());
    }

    #[test]
    fn minimal_ranks() {
        let min = |s: &[i64]| PathDiagram::minimal(&Path::from(s)).ranks().to_vec();
        assert_eq!(min(&[2, 0, 2, -3, 1, -2]), vec![0, 0, 0, 3, 3, 3]);
        assert_eq!(min(&[1, 1, -1, -1]), vec![0, 0, 1, 1]);
        assert_eq!(min(&[1, -1]), vec![0, 1]);
        assert!(min(&[]).is_empty());
    }

    #[test]
    fn vpath_keeps_steps() {
        let d = PathDiagram::new(vec![1, -1, 1, -1], vec![0, 1, 0, 1]).unwrap();
        assert_eq!(d.vpath(), Path::from(&[1, -1, 1, -1][..]));
        assert_eq!(PathDiagram::default().vpath(), Path::default());
        let p = Path::from(&[2, 0, 2, -3, 1, -2][..]);
        assert_eq!(PathDiagram::minimal(&p).vpath(), p);
    }

    #[test]
    fn row_delta_examples() {
        let d = PathDiagram::new(vec![1, -1], vec![0, 1]).unwrap();
        let r = d.row_count_delta(0);
        assert_eq!((r.delta, r.starts_at_j, r.ends_at_j), (0, 1, 1));

        let d = PathDiagram::new(vec![0], vec![3]).unwrap();
        let r = d.row_count_delta(3);
        assert_eq!((r.delta, r.starts_at_j, r.ends_at_j), (0, 1, 1));

        let r = sample().row_count_delta(4);
        assert_eq!((r.delta, r.starts_at_j, r.ends_at_j), (3, 3, 0));
        assert!(r.is_consistent());
    }

    #[test]
    fn length_mismatch() {
        assert!(matches!(
            PathDiagram::new(vec![1], vec![]),
            Err(Error::LengthMismatch { steps: 1, ranks: 0 })
        ));
    }
}
