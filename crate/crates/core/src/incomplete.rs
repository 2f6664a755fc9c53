//! Incomplete Dyck paths and their sweep maps, computed by completing the
//! path with a leading up step of height `a`, mapping, and stripping it off.

use std::fmt;

use crate::error::{Error, Result};
use crate::invert::inv_osweep;
use crate::path::Path;
use crate::schedule::PermSchedule;
use crate::sweep::{emission_order, osweep, sweep};

/// A path with sum `-a < 0` that stays at or above level 0 when started at
/// level `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncompletePath(Path);

impl IncompletePath {
    pub fn new(path: Path) -> Result<Self> {
        if path.is_incomplete() {
            Ok(Self(path))
        } else {
            Err(Error::NotIncomplete(path.to_string()))
        }
    }

    pub fn path(&self) -> &Path {
        &self.0
    }

    pub fn into_path(self) -> Path {
        self.0
    }

    /// Starting level `a`.
    pub fn start_level(&self) -> i64 {
        self.0.start_level()
    }

    /// `r_1 = a`, `r_i = a + b_1 + ... + b_{i-1}`.
    pub fn ranks(&self) -> Vec<i64> {
        self.0.starting_ranks()
    }
}

impl fmt::Display for IncompletePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `(a, b_1, ..., b_N)`.
pub fn complete(p: &IncompletePath) -> Path {
    let mut steps = Vec::with_capacity(p.0.len() + 1);
    steps.push(p.start_level());
    steps.extend_from_slice(p.0.steps());
    Path::new(steps)
}

/// Drops the leading up step of a Dyck path whose remainder is incomplete.
pub fn strip(d: &Path) -> Result<IncompletePath> {
    match d.steps().split_first() {
        Some((&first, rest)) if first > 0 => {
            let rest = Path::from(rest);
            if rest.start_level() != first {
                return Err(Error::NotDyck(d.to_string()));
            }
            IncompletePath::new(rest)
        }
        _ => Err(Error::NotIncomplete(d.to_string())),
    }
}

/// Maps through the completion with the lifted schedule. The added arrow is
/// the leftmost level-0 arrow and the lifted schedule emits it first.
fn conjugate(p: &IncompletePath, lifted: &PermSchedule) -> Result<IncompletePath> {
    let completed = complete(p);
    let order = emission_order(&completed, lifted);
    if order.order().first().is_some_and(|&c| c != 0) {
        return Err(Error::Invariant(format!(
            "completion arrow of {p} is not emitted first"
        )));
    }
    strip(&Path::new(order.apply(completed.steps())))
}

/// The sweep map on an incomplete path, as `strip . osweep(., cycle) . complete`.
pub fn sweep_incomplete(p: &IncompletePath) -> Result<IncompletePath> {
    conjugate(p, &PermSchedule::cycle())
}

/// Sweep of the incomplete path's own diagram (ranks starting at `a`).
pub fn sweep_incomplete_direct(p: &IncompletePath) -> Result<IncompletePath> {
    IncompletePath::new(sweep(p.path()))
}

/// `strip . osweep(., lift(schedule)) . complete`.
pub fn osweep_incomplete(p: &IncompletePath, schedule: &PermSchedule) -> Result<IncompletePath> {
    conjugate(p, &schedule.lift())
}

/// Order sweep of the incomplete path's own diagram.
pub fn osweep_incomplete_direct(p: &IncompletePath, schedule: &PermSchedule) -> Result<IncompletePath> {
    IncompletePath::new(osweep(p.path(), schedule))
}

/// Preimage under [`osweep_incomplete`].
pub fn inv_osweep_incomplete(p: &IncompletePath, schedule: &PermSchedule) -> Result<IncompletePath> {
    strip(&inv_osweep(&complete(p), &schedule.lift())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(steps: &[i64]) -> IncompletePath {
        IncompletePath::new(Path::from(steps)).unwrap()
    }

    fn p(steps: &[i64]) -> Path {
        Path::from(steps)
    }

    #[test]
    fn complete_and_strip() {
        assert_eq!(complete(&ip(&[1, -1, -1])), p(&[1, 1, -1, -1]));
        assert_eq!(complete(&ip(&[-1, 1, -1])), p(&[1, -1, 1, -1]));
        assert_eq!(complete(&ip(&[-2])), p(&[2, -2]));
        assert_eq!(strip(&p(&[1, 1, -1, -1])).unwrap(), ip(&[1, -1, -1]));
        assert_eq!(strip(&p(&[2, -2])).unwrap(), ip(&[-2]));
        assert!(complete(&ip(&[1, -1, -1])).is_dyck());
    }

    #[test]
    fn strip_rejects() {
        assert!(strip(&p(&[])).is_err());
        assert!(strip(&p(&[0, 1, -1])).is_err());
        assert!(strip(&p(&[-1, 1])).is_err());
        // Remainder dips below 0 from level 1.
        assert!(strip(&p(&[1, -2, 1])).is_err());
        assert!(IncompletePath::new(p(&[1, -1])).is_err());
    }

    #[test]
    fn sweep_examples() {
        assert_eq!(sweep_incomplete(&ip(&[1, -1, -1])).unwrap(), ip(&[-1, 1, -1]));
        assert_eq!(sweep_incomplete(&ip(&[-1, 1, -1])).unwrap(), ip(&[1, -1, -1]));
        assert_eq!(sweep_incomplete(&ip(&[-2])).unwrap(), ip(&[-2]));
        for q in [ip(&[1, -1, -1]), ip(&[-1, 1, -1])] {
            assert_eq!(sweep_incomplete_direct(&q).unwrap(), sweep_incomplete(&q).unwrap());
        }
    }

    #[test]
    fn osweep_examples() {
        let q = ip(&[-2]);
        for s in [PermSchedule::reverse(), PermSchedule::identity(), PermSchedule::cycle()] {
            assert_eq!(osweep_incomplete(&q, &s).unwrap(), q);
        }
        let q = ip(&[1, -1, 0, -1]);
        assert_eq!(
            osweep_incomplete(&q, &PermSchedule::reverse()).unwrap(),
            sweep_incomplete(&q).unwrap()
        );
        let id = PermSchedule::identity();
        assert_eq!(
            osweep_incomplete(&q, &id).unwrap(),
            osweep_incomplete_direct(&q, &id).unwrap()
        );
    }

    #[test]
    fn inverse_round_trip() {
        let q = ip(&[1, -1, -1]);
        for s in [PermSchedule::reverse(), PermSchedule::identity()] {
            let image = osweep_incomplete(&q, &s).unwrap();
            assert_eq!(inv_osweep_incomplete(&image, &s).unwrap(), q);
        }
    }
}
