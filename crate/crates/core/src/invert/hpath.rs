use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::CheckMode;
use crate::diagram::PathDiagram;
use crate::error::{Error, Result};
use crate::path::Path;
use crate::schedule::PermSchedule;
use crate::sweep::osweep;

/// Arrow in `column` (1-based) receives label `i` (1-based) while the tour is
/// at `level`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPathLabel {
    pub round: usize,
    pub i: usize,
    pub column: usize,
    pub level: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    Completed,
    StuckAtLevelZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPathRound {
    /// Number of arrows starting at level 0 when the round began.
    pub k: usize,
    pub labels: Vec<HPathLabel>,
    pub stop: StopReason,
    /// Ranks after the round, including any downshift of unlabelled arrows.
    pub ranks_after: Vec<i64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPathTrace {
    pub rounds: Vec<HPathRound>,
}

impl HPathTrace {
    pub fn labels(&self) -> impl Iterator<Item = &HPathLabel> {
        self.rounds.iter().flat_map(|r| r.labels.iter())
    }
}

pub fn hpath(diagram: &PathDiagram, schedule: &PermSchedule) -> Result<(Path, HPathTrace)> {
    hpath_with(diagram, schedule, CheckMode::default())
}

/// Whether the first labelling tour covers every arrow.
pub fn is_stable(diagram: &PathDiagram, schedule: &PermSchedule) -> Result<bool> {
    let (_, trace) = hpath(diagram, schedule)?;
    Ok(trace.rounds.len() == 1)
}

fn validate(diagram: &PathDiagram) -> Result<()> {
    if !diagram.is_increasing() {
        return Err(Error::NotIncreasing);
    }
    if !diagram.is_positive() {
        return Err(Error::NotPositive);
    }
    if !diagram.is_balanced() {
        return Err(Error::NotBalanced);
    }
    Ok(())
}

enum Tour {
    Done(Vec<usize>),
    Stuck {
        labeled: Vec<usize>,
        level: i64,
        visits: usize,
    },
}

/// One pass of step 2. Level-0 visits take the `phi_k^{-1}(n)`-th level-0
/// arrow; every other level takes its rightmost unlabelled arrow.
fn tour(
    diagram: &PathDiagram,
    schedule: &PermSchedule,
    round: usize,
    labels: &mut Vec<HPathLabel>,
) -> Result<(Tour, usize)> {
    let n = diagram.len();
    let ranks = diagram.ranks();
    let level_zero: Vec<usize> = (0..n).filter(|&i| ranks[i] == 0).collect();
    let k = level_zero.len();
    let inverse = schedule.phi_inverse(k);

    let mut unlabeled: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, &r) in ranks.iter().enumerate() {
        if r != 0 {
            unlabeled.entry(r).or_default().push(i);
        }
    }

    let mut labeled = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut level = 0;
    let mut visits = 0;
    for i in 1..=n {
        let pick = if level == 0 {
            visits += 1;
            match inverse.get(visits - 1) {
                Some(&j) => {
                    let column = level_zero[j - 1];
                    if labeled[column] {
                        return Err(Error::Invariant(format!(
                            "level-0 selection hit labelled column {}",
                            column + 1
                        )));
                    }
                    Some(column)
                }
                None => None,
            }
        } else {
            unlabeled.get_mut(&level).and_then(Vec::pop)
        };
        let Some(column) = pick else {
            return Ok((
                Tour::Stuck {
                    labeled: order,
                    level,
                    visits,
                },
                k,
            ));
        };
        labels.push(HPathLabel {
            round,
            i,
            column: column + 1,
            level,
        });
        labeled[column] = true;
        order.push(column);
        level = diagram.end_rank(column);
    }
    Ok((Tour::Done(order), k))
}

/// Reconstructs the Order sweep preimage of `vpath(diagram)` from an
/// increasing balanced diagram. Stuck tours shift every unlabelled arrow one
/// level down and start over.
pub fn hpath_with(diagram: &PathDiagram, schedule: &PermSchedule, checks: CheckMode) -> Result<(Path, HPathTrace)> {
    validate(diagram)?;
    let mut current = diagram.clone();
    let mut trace = HPathTrace::default();
    loop {
        let round = trace.rounds.len() + 1;
        let mut labels = Vec::new();
        let (outcome, k) = tour(&current, schedule, round, &mut labels)?;
        match outcome {
            Tour::Done(order) => {
                trace.rounds.push(HPathRound {
                    k,
                    labels,
                    stop: StopReason::Completed,
                    ranks_after: current.ranks().to_vec(),
                });
                let steps = current.steps();
                let path = Path::new(order.iter().map(|&c| steps[c]).collect());
                checks.check(osweep(&path, schedule) == diagram.vpath(), || {
                    format!("osweep({path}) does not reproduce the diagram's V-path")
                })?;
                return Ok((path, trace));
            }
            Tour::Stuck { labeled, level, visits } => {
                check_stuck_state(&current, &labeled, level, visits, k, checks)?;
                let mut is_labeled = vec![false; current.len()];
                for &c in &labeled {
                    is_labeled[c] = true;
                }
                for (c, r) in current.ranks_mut().iter_mut().enumerate() {
                    if !is_labeled[c] {
                        *r -= 1;
                    }
                }
                // Needed for termination: ranks are bounded below.
                if !current.is_positive() {
                    return Err(Error::Invariant(format!(
                        "downshift in round {round} left a negative rank"
                    )));
                }
                checks.check(current.is_balanced(), || {
                    format!("downshift in round {round} unbalanced the diagram")
                })?;
                checks.check(k == 0 || current.ranks()[0] == 0, || {
                    format!("downshift in round {round} moved the first arrow off level 0")
                })?;
                trace.rounds.push(HPathRound {
                    k,
                    labels,
                    stop: StopReason::StuckAtLevelZero,
                    ranks_after: current.ranks().to_vec(),
                });
            }
        }
    }
}

fn check_stuck_state(
    diagram: &PathDiagram,
    labeled: &[usize],
    level: i64,
    visits: usize,
    k: usize,
    checks: CheckMode,
) -> Result<()> {
    checks.check(level == 0, || format!("tour got stuck at level {level}"))?;
    checks.check(visits == k + 1, || {
        format!(
            "tour got stuck with {} of {k} level-0 arrows labelled",
            visits.saturating_sub(1)
        )
    })?;
    if checks == CheckMode::Off {
        return Ok(());
    }
    let steps = diagram.steps();
    let prefix = Path::new(labeled.iter().map(|&c| steps[c]).collect());
    checks.check(prefix.is_dyck() && prefix.diagram().is_balanced(), || {
        format!("labelled prefix {prefix} is not a balanced Dyck path")
    })?;
    let mut rest_steps = Vec::new();
    let mut rest_ranks = Vec::new();
    for (c, (&b, &r)) in steps.iter().zip(diagram.ranks()).enumerate() {
        if !labeled.contains(&c) {
            rest_steps.push(b);
            rest_ranks.push(r);
        }
    }
    let rest = PathDiagram::from_parts_unchecked(rest_steps, rest_ranks);
    checks.check(rest.is_balanced(), || "unlabelled arrows are not balanced".to_string())
}
