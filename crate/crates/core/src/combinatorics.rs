//! Exhaustive enumeration of path families and brute-force checks of the
//! Order sweep map on them.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::incomplete::{inv_osweep_incomplete, osweep_incomplete, IncompletePath};
use crate::invert::inv_osweep;
use crate::multiset::StepMultiset;
use crate::path::Path;
use crate::schedule::PermSchedule;
use crate::sweep::osweep;

pub const DEFAULT_CAP: usize = 1_000_000;

/// Longest path the enumerator will attempt.
pub const MAX_LENGTH: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Dyck,
    Free,
    Incomplete,
}

impl std::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FamilyKind::Dyck => "dyck",
            FamilyKind::Free => "free",
            FamilyKind::Incomplete => "incomplete",
        })
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = crate::error::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dyck" => Ok(FamilyKind::Dyck),
            "free" => Ok(FamilyKind::Free),
            "incomplete" => Ok(FamilyKind::Incomplete),
            other => Err(crate::error::ParseError::new(
                other,
                "expected dyck, free or incomplete",
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub multiset: StepMultiset,
    pub kind: FamilyKind,
    /// Abort once the family grows past this many paths.
    pub cap: usize,
}

impl EnumerationSpec {
    pub fn new(multiset: StepMultiset, kind: FamilyKind) -> Self {
        Self {
            multiset,
            kind,
            cap: DEFAULT_CAP,
        }
    }

    pub fn dyck(multiset: StepMultiset) -> Self {
        Self::new(multiset, FamilyKind::Dyck)
    }

    pub fn incomplete(multiset: StepMultiset) -> Self {
        Self::new(multiset, FamilyKind::Incomplete)
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let sum = self.multiset.total_sum();
        match self.kind {
            FamilyKind::Dyck | FamilyKind::Free if sum != 0 => Err(Error::InvalidSpec(format!(
                "{} paths need a type summing to 0, {} sums to {sum}",
                self.kind, self.multiset
            ))),
            FamilyKind::Incomplete if sum >= 0 => Err(Error::InvalidSpec(format!(
                "incomplete paths need a negative type sum, {} sums to {sum}",
                self.multiset
            ))),
            _ if self.multiset.size() > MAX_LENGTH => Err(Error::InvalidSpec(format!(
                "paths longer than {MAX_LENGTH} steps are not enumerated"
            ))),
            _ => Ok(()),
        }
    }

    /// Lowest level a prefix may reach, or `None` when unconstrained.
    fn floor(&self) -> Option<i64> {
        match self.kind {
            FamilyKind::Dyck => Some(0),
            // Started at level a = -sum, prefixes must stay >= 0.
            FamilyKind::Incomplete => Some(self.multiset.total_sum()),
            FamilyKind::Free => None,
        }
    }
}

/// Depth-first multiset permutation generator in lexicographic order,
/// abandoning any prefix that drops below the family's floor.
struct Generator<'a> {
    values: Vec<i64>,
    remaining: Vec<usize>,
    floor: Option<i64>,
    length: usize,
    prefix: Vec<i64>,
    visit: &'a mut dyn FnMut(&[i64]) -> Result<()>,
}

impl Generator<'_> {
    fn run(&mut self, level: i64) -> Result<()> {
        if self.prefix.len() == self.length {
            return (self.visit)(&self.prefix);
        }
        for idx in 0..self.values.len() {
            if self.remaining[idx] == 0 {
                continue;
            }
            let next = level + self.values[idx];
            if self.floor.is_some_and(|f| next < f) {
                continue;
            }
            self.remaining[idx] -= 1;
            self.prefix.push(self.values[idx]);
            let r = self.run(next);
            self.prefix.pop();
            self.remaining[idx] += 1;
            r?;
        }
        Ok(())
    }
}

/// Calls `visit` on each path of the family in lexicographic order.
pub fn for_each_path(spec: &EnumerationSpec, mut visit: impl FnMut(&[i64]) -> Result<()>) -> Result<()> {
    spec.validate()?;
    let (values, remaining): (Vec<i64>, Vec<usize>) = spec.multiset.entries().unzip();
    let mut gen = Generator {
        values,
        remaining,
        floor: spec.floor(),
        length: spec.multiset.size(),
        prefix: Vec::with_capacity(spec.multiset.size()),
        visit: &mut visit,
    };
    gen.run(0)
}

/// All paths of the family, in lexicographic order.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Vec<Path>> {
    let mut out = Vec::new();
    for_each_path(spec, |steps| {
        if out.len() >= spec.cap {
            return Err(Error::FamilyCapExceeded(spec.cap));
        }
        out.push(Path::from(steps));
        Ok(())
    })?;
    Ok(out)
}

pub fn count(spec: &EnumerationSpec) -> Result<usize> {
    let mut n = 0usize;
    for_each_path(spec, |_| {
        if n >= spec.cap {
            return Err(Error::FamilyCapExceeded(spec.cap));
        }
        n += 1;
        Ok(())
    })?;
    Ok(n)
}

/// Preimage of a Dyck path found by applying `osweep` to its whole family.
/// Zero or several preimages is an error.
pub fn oracle_invert(path: &Path, schedule: &PermSchedule) -> Result<Path> {
    oracle_invert_capped(path, schedule, DEFAULT_CAP)
}

pub fn oracle_invert_capped(path: &Path, schedule: &PermSchedule, cap: usize) -> Result<Path> {
    if !path.is_dyck() {
        return Err(Error::NotDyck(path.to_string()));
    }
    let spec = EnumerationSpec::dyck(path.type_of()).with_cap(cap);
    let mut found = Vec::new();
    let mut seen = 0usize;
    for_each_path(&spec, |steps| {
        seen += 1;
        if seen > cap {
            return Err(Error::FamilyCapExceeded(cap));
        }
        let candidate = Path::from(steps);
        if osweep(&candidate, schedule) == *path {
            found.push(candidate);
        }
        Ok(())
    })?;
    if found.len() == 1 {
        Ok(found.pop().unwrap())
    } else {
        Err(Error::Preimages {
            path: path.to_string(),
            count: found.len(),
        })
    }
}

/// Full forward table of a Dyck family: image -> preimage. Fails on a
/// collision.
pub fn inversion_table(spec: &EnumerationSpec, schedule: &PermSchedule) -> Result<HashMap<Path, Path>> {
    let mut table = HashMap::new();
    for d in enumerate(spec)? {
        let image = osweep(&d, schedule);
        if table.insert(image.clone(), d).is_some() {
            return Err(Error::Preimages {
                path: image.to_string(),
                count: 2,
            });
        }
    }
    Ok(table)
}

/// Outcome of [`verify_bijection`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionReport {
    pub family: String,
    pub kind: FamilyKind,
    pub size: usize,
    pub schedule: String,
    /// No two paths share an image.
    pub injective: bool,
    /// Every image lies in the family.
    pub closed: bool,
    /// Inversion undoes the map on both sides.
    pub roundtrip: bool,
    pub pass: bool,
}

impl BijectionReport {
    /// Combines reports for disjoint slices of one family.
    pub fn merge(mut self, other: &BijectionReport) -> Self {
        self.size += other.size;
        self.injective &= other.injective;
        self.closed &= other.closed;
        self.roundtrip &= other.roundtrip;
        self.pass &= other.pass;
        self
    }
}

/// Checks that the Order sweep map permutes a Dyck or incomplete family and
/// that the inversion pipeline undoes it.
pub fn verify_bijection(spec: &EnumerationSpec, schedule: &PermSchedule) -> Result<BijectionReport> {
    let family = enumerate(spec)?;
    let members: HashSet<&Path> = family.iter().collect();

    type Map<'a> = Box<dyn Fn(&Path) -> Result<Path> + 'a>;
    let (forward, backward): (Map, Map) = match spec.kind {
        FamilyKind::Dyck => (
            Box::new(|p: &Path| Ok(osweep(p, schedule))),
            Box::new(|p: &Path| inv_osweep(p, schedule)),
        ),
        FamilyKind::Incomplete => (
            Box::new(|p: &Path| Ok(osweep_incomplete(&IncompletePath::new(p.clone())?, schedule)?.into_path())),
            Box::new(|p: &Path| Ok(inv_osweep_incomplete(&IncompletePath::new(p.clone())?, schedule)?.into_path())),
        ),
        FamilyKind::Free => {
            return Err(Error::InvalidSpec(
                "bijectivity is only verified for dyck and incomplete families".into(),
            ))
        }
    };

    let mut images = HashSet::with_capacity(family.len());
    let mut closed = true;
    let mut roundtrip = true;
    for p in &family {
        let image = forward(p)?;
        closed &= members.contains(&image);
        roundtrip &= backward(&image).ok().as_ref() == Some(p);
        roundtrip &= backward(p).ok().and_then(|q| forward(&q).ok()).as_ref() == Some(p);
        images.insert(image);
    }
    let injective = images.len() == family.len();
    Ok(BijectionReport {
        family: spec.multiset.to_string(),
        kind: spec.kind,
        size: family.len(),
        schedule: schedule.name(),
        injective,
        closed,
        roundtrip,
        pass: injective && closed && roundtrip,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> StepMultiset {
        s.parse().unwrap()
    }

    fn paths(v: &[&[i64]]) -> Vec<Path> {
        v.iter().map(|s| Path::from(*s)).collect()
    }

    #[test]
    fn catalan_three() {
        let family = enumerate(&EnumerationSpec::dyck(ms("1^3,-1^3"))).unwrap();
        assert_eq!(family.len(), 5);
        let mut sorted = family.clone();
        sorted.sort();
        assert_eq!(family, sorted);
    }

    #[test]
    fn rational_family() {
        let family = enumerate(&EnumerationSpec::dyck(ms("3^2,-2^3"))).unwrap();
        assert_eq!(family, paths(&[&[3, -2, 3, -2, -2], &[3, 3, -2, -2, -2]]));
    }

    #[test]
    fn incomplete_family() {
        let family = enumerate(&EnumerationSpec::incomplete(ms("1,-1^2"))).unwrap();
        assert_eq!(family, paths(&[&[-1, 1, -1], &[1, -1, -1]]));
    }

    #[test]
    fn free_family_is_all_arrangements() {
        assert_eq!(
            count(&EnumerationSpec::new(ms("1^2,-1^2"), FamilyKind::Free)).unwrap(),
            6
        );
    }

    #[test]
    fn invalid_specs() {
        assert!(enumerate(&EnumerationSpec::dyck(ms("1,-2"))).is_err());
        assert!(enumerate(&EnumerationSpec::incomplete(ms("1,-1"))).is_err());
        let err = enumerate(&EnumerationSpec::dyck(ms("1^4,-1^4")).with_cap(10)).unwrap_err();
        assert_eq!(err, Error::FamilyCapExceeded(10));
        assert_eq!(count(&EnumerationSpec::dyck(ms("1^4,-1^4")).with_cap(14)).unwrap(), 14);
    }

    #[test]
    fn empty_multiset() {
        assert_eq!(
            enumerate(&EnumerationSpec::dyck(StepMultiset::new())).unwrap(),
            vec![Path::default()]
        );
    }

    #[test]
    fn oracle_examples() {
        let d = Path::from(&[2, 0, 2, -3, 1, -2][..]);
        assert_eq!(
            oracle_invert(&d, &PermSchedule::reverse()).unwrap(),
            Path::from(&[0, 2, 2, 1, -2, -3][..])
        );
        let one = Path::from(&[1, -1][..]);
        assert_eq!(oracle_invert(&one, &PermSchedule::cycle()).unwrap(), one);
    }

    #[test]
    fn verify_examples() {
        let r = verify_bijection(&EnumerationSpec::dyck(ms("1^3,-1^3")), &PermSchedule::reverse()).unwrap();
        assert!(r.pass);
        assert_eq!(r.size, 5);
        let r = verify_bijection(&EnumerationSpec::dyck(ms("3^2,-2^3")), &PermSchedule::identity()).unwrap();
        assert!(r.pass);
        assert_eq!(r.size, 2);
        let r = verify_bijection(&EnumerationSpec::incomplete(ms("1,-1^2")), &PermSchedule::cycle()).unwrap();
        assert!(r.pass);
        assert_eq!(r.size, 2);
        assert_eq!(r.family, "1,-1^2");
    }

    #[test]
    fn left_to_right_level_zero_order_is_not_injective() {
        // Listing every level in left-to-right order collapses two paths of
        // type {1^2, -1^2}; the identity schedule only changes level 0 and
        // stays bijective.
        let family = enumerate(&EnumerationSpec::dyck(ms("1^2,-1^2"))).unwrap();
        let left_to_right = |p: &Path| {
            let ranks = p.starting_ranks();
            let mut idx: Vec<usize> = (0..p.len()).collect();
            idx.sort_by_key(|&i| ranks[i]);
            idx.into_iter().map(|i| p.steps()[i]).collect::<Vec<_>>()
        };
        let images: HashSet<Vec<i64>> = family.iter().map(left_to_right).collect();
        assert!(images.len() < family.len());
    }

    #[test]
    fn report_merge() {
        let a = verify_bijection(&EnumerationSpec::dyck(ms("1^2,-1^2")), &PermSchedule::reverse()).unwrap();
        let b = a.clone().merge(&a);
        assert_eq!(b.size, 4);
        assert!(b.pass);
    }
}
