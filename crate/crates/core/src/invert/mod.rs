//! Inversion of the Order sweep map.
//!
//! A Dyck path is lifted to its minimal diagram, raised by [`vib`] until it
//! balances, and then relabelled by [`hpath`] into the preimage.

mod hpath;
mod vib;

use serde::{Deserialize, Serialize};

pub use hpath::{hpath, hpath_with, is_stable, HPathLabel, HPathRound, HPathTrace, StopReason};
pub use vib::{default_step_cap, vib, vib_with, VibMove, VibOptions, VibTrace};

use crate::diagram::PathDiagram;
use crate::error::{Error, Result};
use crate::path::Path;
use crate::schedule::PermSchedule;

/// What to do when a proven invariant fails at runtime.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Panic,
    #[default]
    Error,
    Off,
}

impl CheckMode {
    pub(crate) fn check(self, ok: bool, what: impl FnOnce() -> String) -> Result<()> {
        if ok || self == CheckMode::Off {
            return Ok(());
        }
        let msg = what();
        match self {
            CheckMode::Panic => panic!("invariant violated: {msg}"),
            _ => Err(Error::Invariant(msg)),
        }
    }
}

/// `R <= R'` pointwise.
pub fn rank_leq(lhs: &[i64], rhs: &[i64]) -> Result<bool> {
    if lhs.len() != rhs.len() {
        return Err(Error::LengthMismatch {
            steps: lhs.len(),
            ranks: rhs.len(),
        });
    }
    Ok(lhs.iter().zip(rhs).all(|(a, b)| a <= b))
}

/// Every intermediate of one inversion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvOSweepTrace {
    pub minimal_ranks: Vec<i64>,
    pub vib: VibTrace,
    pub hpath: HPathTrace,
    pub path: Path,
}

pub fn inv_osweep(path: &Path, schedule: &PermSchedule) -> Result<Path> {
    inv_osweep_traced(path, schedule, CheckMode::default()).map(|t| t.path)
}

/// Preimage of `path` under `osweep(., schedule)`: minimal diagram, then
/// vertical balancing, then relabelling.
pub fn inv_osweep_traced(path: &Path, schedule: &PermSchedule, checks: CheckMode) -> Result<InvOSweepTrace> {
    if !path.is_dyck() {
        return Err(Error::NotDyck(path.to_string()));
    }
    let minimal = PathDiagram::minimal(path);
    let (balanced, vib_trace) = vib_with(
        &minimal,
        &VibOptions {
            checks,
            ..VibOptions::default()
        },
    )?;
    let (preimage, hpath_trace) = hpath_with(&balanced, schedule, checks)?;
    checks.check(hpath_trace.rounds.len() == 1, || {
        format!(
            "balanced diagram for {path} was not stable ({} rounds)",
            hpath_trace.rounds.len()
        )
    })?;
    Ok(InvOSweepTrace {
        minimal_ranks: minimal.ranks().to_vec(),
        vib: vib_trace,
        hpath: hpath_trace,
        path: preimage,
    })
}
