//! Order sweep maps on general Dyck paths.
//!
//! The sweep map reorders the arrows of a path by starting rank, breaking
//! ties right to left. An Order sweep map does the same except at level 0,
//! where a [`PermSchedule`] decides the order. Every Order sweep map permutes
//! the Dyck paths of a given type; [`inv_osweep`] computes preimages by
//! vertically balancing a path diagram ([`vib`]) and relabelling it
//! ([`hpath`]).
//!
//! ```
//! use osweep::{inv_osweep, sweep, Path, PermSchedule};
//!
//! let d: Path = "2,0,2,-3,1,-2".parse().unwrap();
//! assert_eq!(sweep(&d).to_string(), "2,1,-2,2,0,-3");
//!
//! let pre = inv_osweep(&d, &PermSchedule::reverse()).unwrap();
//! assert_eq!(sweep(&pre), d);
//! ```

pub mod combinatorics;
pub mod diagram;
pub mod error;
pub mod incomplete;
pub mod invert;
pub mod multiset;
pub mod path;
pub mod schedule;
pub mod sweep;
pub mod text;

pub use combinatorics::{
    count, enumerate, oracle_invert, verify_bijection, BijectionReport, EnumerationSpec, FamilyKind,
};
pub use diagram::{ArrowColor, PathDiagram, RowCount, RowCounts, RowDelta};
pub use error::{Error, ParseError, Result};
pub use incomplete::{complete, inv_osweep_incomplete, osweep_incomplete, strip, sweep_incomplete, IncompletePath};
pub use invert::{
    hpath, hpath_with, inv_osweep, inv_osweep_traced, is_stable, rank_leq, vib, vib_with, CheckMode, HPathTrace,
    InvOSweepTrace, VibOptions, VibTrace,
};
pub use multiset::StepMultiset;
pub use path::{Path, PathKind};
pub use schedule::{Builtin, PermSchedule};
pub use sweep::{emission_order, hib, osweep, sweep, SweepOrder};
