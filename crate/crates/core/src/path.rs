use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::PathDiagram;
use crate::error::ParseError;
use crate::multiset::StepMultiset;
use crate::text;

/// A lattice path given by its step values. Step `b` is the arrow `(1, b)`.
///
/// Paths are connected and end at level 0, so the first arrow starts at
/// level `-sum(steps)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path {
    steps: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    /// Sums to zero and never dips below level 0.
    Dyck,
    /// Sums to zero but dips below level 0 somewhere.
    Free,
    /// Negative sum `-a`, never below 0 when started at level `a`.
    Incomplete,
    Other,
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathKind::Dyck => "dyck",
            PathKind::Free => "free",
            PathKind::Incomplete => "incomplete",
            PathKind::Other => "other",
        })
    }
}

impl Path {
    pub fn new(steps: Vec<i64>) -> Self {
        Self { steps }
    }

    pub fn steps(&self) -> &[i64] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<i64> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.steps.iter().sum()
    }

    /// Level at which the first arrow starts (`a` for incomplete paths).
    pub fn start_level(&self) -> i64 {
        -self.total()
    }

    /// Starting rank of each arrow in the connected picture of the path.
    pub fn starting_ranks(&self) -> Vec<i64> {
        let mut level = self.start_level();
        self.steps
            .iter()
            .map(|&b| {
                let r = level;
                level += b;
                r
            })
            .collect()
    }

    /// The connected path diagram (ranks are the starting levels).
    pub fn diagram(&self) -> PathDiagram {
        PathDiagram::from_parts_unchecked(self.steps.clone(), self.starting_ranks())
    }

    pub fn type_of(&self) -> StepMultiset {
        self.steps.iter().copied().collect()
    }

    pub fn is_free(&self) -> bool {
        self.total() == 0
    }

    pub fn is_dyck(&self) -> bool {
        self.is_free() && self.prefixes_stay_above(0)
    }

    pub fn is_incomplete(&self) -> bool {
        let a = self.start_level();
        a > 0 && self.prefixes_stay_above(a)
    }

    fn prefixes_stay_above(&self, start: i64) -> bool {
        let mut level = start;
        for &b in &self.steps {
            level += b;
            if level < 0 {
                return false;
            }
        }
        true
    }

    pub fn classify(&self) -> PathKind {
        if self.is_dyck() {
            PathKind::Dyck
        } else if self.is_free() {
            PathKind::Free
        } else if self.is_incomplete() {
            PathKind::Incomplete
        } else {
            PathKind::Other
        }
    }
}

impl From<Vec<i64>> for Path {
    fn from(steps: Vec<i64>) -> Self {
        Self::new(steps)
    }
}

impl From<&[i64]> for Path {
    fn from(steps: &[i64]) -> Self {
        Self::new(steps.to_vec())
    }
}

impl FromStr for Path {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        text::parse_int_list(s).map(Path::new)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_int_list(&self.steps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(steps: &[i64]) -> Path {
        Path::from(steps)
    }

    #[test]
    fn classifies_paths() {
        assert_eq!(p(&[2, 0, 2, -3, 1, -2]).classify(), PathKind::Dyck);
        assert_eq!(p(&[1, -1, -1]).classify(), PathKind::Incomplete);
        assert_eq!(p(&[1, -1, -1]).start_level(), 1);
        assert_eq!(p(&[-1, 1]).classify(), PathKind::Free);
        assert_eq!(p(&[1, 1]).classify(), PathKind::Other);
        assert_eq!(p(&[-3, 1]).classify(), PathKind::Other);
        assert_eq!(p(&[]).classify(), PathKind::Dyck);
    }

    #[test]
    fn predicates_are_consistent() {
        for steps in [vec![-1, 1], vec![1, -1], vec![-2], vec![0, 0], vec![3, -1]] {
            let path = Path::new(steps);
            if path.is_dyck() {
                assert!(path.is_free());
            }
            assert!(!(path.is_free() && path.is_incomplete()));
        }
    }

    #[test]
    fn starting_ranks_end_at_zero() {
        assert_eq!(p(&[2, 0, 2, -3, 1, -2]).starting_ranks(), vec![0, 2, 2, 4, 1, 2]);
        assert_eq!(p(&[-1, 1, -1]).starting_ranks(), vec![1, 0, 1]);
        assert_eq!(p(&[-1, 1]).starting_ranks(), vec![0, -1]);
    }

    #[test]
    fn text_round_trip() {
        let path: Path = "2,0,2,-3,1,-2".parse().unwrap();
        assert_eq!(path.to_string(), "2,0,2,-3,1,-2");
        assert_eq!("".parse::<Path>().unwrap(), Path::default());
    }
}
