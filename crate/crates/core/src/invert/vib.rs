use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::CheckMode;
use crate::diagram::PathDiagram;
use crate::error::{Error, Result};

/// One unit raise of an arrow. `step` and `column` are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VibMove {
    pub step: usize,
    pub row: i64,
    pub column: usize,
    pub before: i64,
    pub after: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VibTrace {
    pub initial_ranks: Vec<i64>,
    pub final_ranks: Vec<i64>,
    pub moves: Vec<VibMove>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VibOptions {
    /// Maximum number of moves; `None` uses [`default_step_cap`].
    pub cap: Option<usize>,
    pub checks: CheckMode,
}

/// `N * (H + N)` where `H` bounds both the highest level of the diagram and
/// the total rise of its steps.
pub fn default_step_cap(diagram: &PathDiagram) -> usize {
    let n = diagram.len() as u64;
    let rise: i64 = diagram.steps().iter().filter(|&&b| b > 0).sum();
    let height = diagram.max_level().unwrap_or(0).max(rise).max(0) as u64;
    n.saturating_mul(height.saturating_add(n))
        .try_into()
        .unwrap_or(usize::MAX)
}

pub fn vib(diagram: &PathDiagram) -> Result<(PathDiagram, VibTrace)> {
    vib_with(diagram, &VibOptions::default())
}

/// Raises arrows one level at a time until the diagram balances: each move
/// takes the lowest row with a positive count and lifts the rightmost arrow
/// starting on it.
pub fn vib_with(diagram: &PathDiagram, options: &VibOptions) -> Result<(PathDiagram, VibTrace)> {
    if !diagram.is_positive() {
        return Err(if diagram.is_increasing() {
            Error::NotPositive
        } else {
            Error::NotIncreasing
        });
    }
    let path = diagram.vpath();
    if !path.is_dyck() {
        return Err(Error::NotDyck(path.to_string()));
    }
    let checks = options.checks;
    let cap = options.cap.unwrap_or_else(|| default_step_cap(diagram));

    let mut counts: BTreeMap<i64, i64> = diagram
        .row_counts()
        .iter()
        .map(|(j, c)| (j, c.count()))
        .filter(|&(_, c)| c != 0)
        .collect();
    // Rows that have not yet reached a non-negative count.
    let mut still_negative: BTreeSet<i64> = counts.iter().filter(|(_, &c)| c < 0).map(|(&j, _)| j).collect();

    let mut out = diagram.clone();
    let mut moves = Vec::new();
    while let Some((&row, _)) = counts.iter().find(|(_, &c)| c > 0) {
        if moves.len() >= cap {
            return Err(Error::StepCapExceeded(cap));
        }
        checks.check(counts.range(..row).all(|(_, &c)| c <= 0), || {
            format!("row {row} is not the lowest positive row")
        })?;

        let ranks = out.ranks();
        let column = ranks.partition_point(|&r| r <= row);
        if column == 0 || ranks[column - 1] != row {
            // Cannot continue regardless of the check mode.
            return Err(Error::Invariant(format!("no arrow starts at positive row {row}")));
        }
        let column = column - 1;
        let step = out.steps()[column];
        out.ranks_mut()[column] += 1;
        checks.check(
            column + 1 >= out.len() || out.ranks()[column] <= out.ranks()[column + 1],
            || format!("raising column {} broke monotonicity", column + 1),
        )?;

        if step != 0 {
            for (j, delta) in [(row, -1), (row + step, 1)] {
                let c = counts.entry(j).or_insert(0);
                *c += delta;
                let c = *c;
                if c == 0 {
                    counts.remove(&j);
                }
                if c >= 0 {
                    still_negative.remove(&j);
                } else {
                    checks.check(still_negative.contains(&j), || {
                        format!("row {j} became negative after reaching a non-negative count")
                    })?;
                }
            }
        }

        moves.push(VibMove {
            step: moves.len() + 1,
            row,
            column: column + 1,
            before: row,
            after: row + 1,
        });
    }

    checks.check(counts.is_empty(), || {
        "no positive rows left but the diagram is unbalanced".to_string()
    })?;
    checks.check(out.is_increasing(), || "output is not increasing".to_string())?;

    let trace = VibTrace {
        initial_ranks: diagram.ranks().to_vec(),
        final_ranks: out.ranks().to_vec(),
        moves,
    };
    Ok((out, trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(steps: &[i64], ranks: &[i64]) -> PathDiagram {
        PathDiagram::new(steps.to_vec(), ranks.to_vec()).unwrap()
    }

    #[test]
    fn worked_example() {
        let (out, trace) = vib_with(
            &diagram(&[2, 0, 2, -3, 1, -2], &[0, 0, 0, 3, 3, 3]),
            &VibOptions {
                checks: CheckMode::Panic,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(out.ranks(), &[0, 0, 2, 3, 4, 5]);
        let rows_cols: Vec<(i64, usize)> = trace.moves.iter().map(|m| (m.row, m.column)).collect();
        assert_eq!(rows_cols, vec![(0, 3), (3, 6), (1, 3), (3, 5), (4, 6)]);
        assert!(out.is_balanced());
    }

    #[test]
    fn already_balanced() {
        let d = diagram(&[1, 1, -1, -1], &[0, 0, 1, 1]);
        let (out, trace) = vib(&d).unwrap();
        assert_eq!(out, d);
        assert!(trace.moves.is_empty());

        let (out, trace) = vib(&PathDiagram::default()).unwrap();
        assert!(out.is_empty() && trace.moves.is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(vib(&diagram(&[1, -1], &[1, 0])), Err(Error::NotIncreasing)));
        assert!(matches!(vib(&diagram(&[-1, 1], &[0, 0])), Err(Error::NotPositive)));
        assert!(matches!(vib(&diagram(&[-1, 1], &[1, 1])), Err(Error::NotDyck(_))));
    }

    #[test]
    fn cap_binds() {
        let d = diagram(&[2, 0, 2, -3, 1, -2], &[0, 0, 0, 3, 3, 3]);
        let err = vib_with(
            &d,
            &VibOptions {
                cap: Some(3),
                ..Default::default()
            },
        )
        .unwrap_err();
        assert_eq!(err, Error::StepCapExceeded(3));
        assert!(default_step_cap(&d) >= 5);
    }
}
