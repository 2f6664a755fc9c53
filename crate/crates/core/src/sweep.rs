//! Forward maps: the sweep map, the Order sweep map and the horizontal
//! decomposition that realises an Order sweep image as an increasing diagram.

use crate::diagram::PathDiagram;
use crate::error::{Error, Result};
use crate::path::Path;
use crate::schedule::PermSchedule;

/// Emission order of a sweep: `order()[p]` is the 0-based column of the
/// arrow emitted at position `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOrder(Vec<usize>);

impl SweepOrder {
    pub fn order(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    pub fn apply(&self, steps: &[i64]) -> Vec<i64> {
        self.0.iter().map(|&i| steps[i]).collect()
    }
}

/// Groups column indices by starting rank, ascending column order within a
/// group, with groups ordered as ranks `0, 1, 2, ...` followed by
/// `..., -2, -1`.
fn rank_buckets(ranks: &[i64]) -> Vec<(i64, Vec<usize>)> {
    let mut columns: Vec<usize> = (0..ranks.len()).collect();
    // Stable: equal ranks keep their column order.
    columns.sort_by_key(|&i| (ranks[i] < 0, ranks[i]));
    let mut buckets: Vec<(i64, Vec<usize>)> = Vec::new();
    for i in columns {
        match buckets.last_mut() {
            Some((r, group)) if *r == ranks[i] => group.push(i),
            _ => buckets.push((ranks[i], vec![i])),
        }
    }
    buckets
}

/// Order in which `osweep` emits the arrows of `path`.
pub fn emission_order(path: &Path, schedule: &PermSchedule) -> SweepOrder {
    let mut order = Vec::with_capacity(path.len());
    for (rank, columns) in rank_buckets(&path.starting_ranks()) {
        if rank == 0 {
            let phi = schedule.phi(columns.len());
            order.extend(phi.iter().map(|&j| columns[j - 1]));
        } else {
            order.extend(columns.iter().rev());
        }
    }
    SweepOrder(order)
}

/// The sweep map: arrows sorted by starting rank, ties right to left.
pub fn sweep(path: &Path) -> Path {
    let steps = path.steps();
    let mut out = Vec::with_capacity(steps.len());
    for (_, columns) in rank_buckets(&path.starting_ranks()) {
        out.extend(columns.iter().rev().map(|&i| steps[i]));
    }
    Path::new(out)
}

/// The Order sweep map. Level-0 arrows `C_1..C_k` (left to right) are
/// emitted as `C_{phi_k(1)}, ..., C_{phi_k(k)}`.
pub fn osweep(path: &Path, schedule: &PermSchedule) -> Path {
    Path::new(emission_order(path, schedule).apply(path.steps()))
}

/// Arrows of a Dyck path placed in `osweep` emission order, each keeping its
/// original starting rank.
pub fn hib(path: &Path, schedule: &PermSchedule) -> Result<PathDiagram> {
    if !path.is_dyck() {
        return Err(Error::NotDyck(path.to_string()));
    }
    let ranks = path.starting_ranks();
    let order = emission_order(path, schedule);
    let new_ranks = order.order().iter().map(|&i| ranks[i]).collect();
    PathDiagram::new(order.apply(path.steps()), new_ranks)
}
