#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use osweep::{Builtin, Path, PathDiagram, PermSchedule, StepMultiset};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn p(steps: &[i64]) -> Path {
    Path::from(steps)
}

pub fn ms(s: &str) -> StepMultiset {
    s.parse().unwrap()
}

/// Builtins plus one seeded random table for every k <= 10.
pub fn schedules<R: Rng>(rng: &mut R) -> Vec<PermSchedule> {
    vec![
        PermSchedule::reverse(),
        PermSchedule::identity(),
        PermSchedule::cycle(),
        random_table(rng, 10),
    ]
}

pub fn random_table<R: Rng>(rng: &mut R, max_k: usize) -> PermSchedule {
    let mut table = BTreeMap::new();
    for k in 1..=max_k {
        let mut perm: Vec<usize> = (1..=k).collect();
        perm.shuffle(rng);
        table.insert(k, perm);
    }
    PermSchedule::table(Builtin::Reverse, table).unwrap()
}

/// Every distinct arrangement of the multiset, filtered by `keep`. Shares no
/// code with the library enumerator.
pub fn naive_family(m: &StepMultiset, keep: impl Fn(&Path) -> bool) -> BTreeSet<Path> {
    let values = m.sorted_values();
    let n = values.len();
    values
        .into_iter()
        .permutations(n)
        .map(Path::new)
        .filter(|path| keep(path))
        .collect()
}

/// Random Dyck path: random zero-sum steps rotated to start after a lowest
/// point, which keeps every prefix non-negative.
pub fn random_dyck<R: Rng>(rng: &mut R, max_len: usize, max_step: i64) -> Path {
    let len = rng.gen_range(1..=max_len);
    let mut steps: Vec<i64> = (0..len).map(|_| rng.gen_range(-max_step..=max_step)).collect();
    let mut rest: i64 = -steps.iter().sum::<i64>();
    while rest != 0 {
        let s = rest.clamp(-max_step, max_step);
        steps.push(s);
        rest -= s;
    }
    steps.shuffle(rng);
    let mut level = 0;
    let mut lowest = (0, 0);
    for (i, &b) in steps.iter().enumerate() {
        level += b;
        if level < lowest.0 {
            lowest = (level, i + 1);
        }
    }
    let len = steps.len();
    steps.rotate_left(lowest.1 % len);
    let path = Path::new(steps);
    assert!(path.is_dyck());
    path
}

/// Random weakly increasing sequence in the box `lo <= r <= hi` (both bounds
/// increasing): uniform per coordinate, then a left-to-right running max.
pub fn random_between<R: Rng>(rng: &mut R, lo: &[i64], hi: &[i64]) -> Vec<i64> {
    let mut r: Vec<i64> = lo.iter().zip(hi).map(|(&a, &b)| rng.gen_range(a..=b)).collect();
    for i in 1..r.len() {
        r[i] = r[i].max(r[i - 1]);
    }
    for (i, x) in r.iter_mut().enumerate() {
        *x = (*x).clamp(lo[i], hi[i]);
    }
    r
}

/// Stacks the diagram of `upper` on top of `lower`, raised so the result is
/// still increasing. Both parts balanced means the result is balanced.
pub fn stack(lower: &PathDiagram, upper: &PathDiagram, gap: i64) -> PathDiagram {
    let base = lower
        .ranks()
        .last()
        .copied()
        .unwrap_or(0)
        .max(lower.max_level().unwrap_or(0))
        + gap;
    let mut steps = lower.steps().to_vec();
    let mut ranks = lower.ranks().to_vec();
    steps.extend_from_slice(upper.steps());
    ranks.extend(upper.ranks().iter().map(|r| r + base));
    PathDiagram::new(steps, ranks).unwrap()
}

/// Type multisets of the exhaustive Dyck suite.
pub fn dyck_suite() -> Vec<StepMultiset> {
    let mut out: Vec<StepMultiset> = (2..=6).map(|n| ms(&format!("1^{n},-1^{n}"))).collect();
    for s in ["3^2,-2^3", "2^3,-3^2", "2,1,0,-1,-2", "2^2,0^2,-1^4", "1^4,-2^2"] {
        out.push(ms(s));
    }
    out
}

/// Every multiset with `size` entries from `lo..=hi`.
pub fn multisets(lo: i64, hi: i64, size: usize) -> Vec<StepMultiset> {
    fn go(v: i64, hi: i64, left: usize, cur: &mut Vec<i64>, out: &mut Vec<StepMultiset>) {
        if left == 0 {
            out.push(cur.iter().copied().collect());
            return;
        }
        if v > hi {
            return;
        }
        for take in (0..=left).rev() {
            cur.extend(std::iter::repeat_n(v, take));
            go(v + 1, hi, left - take, cur, out);
            cur.truncate(cur.len() - take);
        }
    }
    let mut out = Vec::new();
    go(lo, hi, size, &mut Vec::new(), &mut out);
    out
}
