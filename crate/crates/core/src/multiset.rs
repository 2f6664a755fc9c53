use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::text::parse_int;

/// Multiset of step values, e.g. `{1^3, (-1)^3}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct StepMultiset {
    entries: BTreeMap<i64, usize>,
}

impl StepMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, value: i64, multiplicity: usize) {
        if multiplicity > 0 {
            *self.entries.entry(value).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity(&self, value: i64) -> usize {
        self.entries.get(&value).copied().unwrap_or(0)
    }

    /// `(value, multiplicity)` pairs in increasing value order.
    pub fn entries(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.entries.iter().map(|(&v, &m)| (v, m))
    }

    /// Number of steps `N`.
    pub fn size(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_sum(&self) -> i64 {
        self.entries.iter().map(|(&v, &m)| v * m as i64).sum()
    }

    pub fn is_balanced_type(&self) -> bool {
        self.total_sum() == 0
    }

    /// Values in increasing order, each repeated by its multiplicity.
    pub fn sorted_values(&self) -> Vec<i64> {
        self.entries
            .iter()
            .flat_map(|(&v, &m)| std::iter::repeat_n(v, m))
            .collect()
    }
}

impl FromIterator<i64> for StepMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut m = StepMultiset::new();
        for v in iter {
            m.insert(v, 1);
        }
        m
    }
}

impl FromStr for StepMultiset {
    type Err = ParseError;

    /// Parses `"1^3,-1^3"`; a missing `^k` means multiplicity one.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut m = StepMultiset::new();
        if s.trim().is_empty() {
            return Ok(m);
        }
        let mut total: i64 = 0;
        let mut size: usize = 0;
        for raw in s.split(',') {
            let term = raw.trim();
            let (value, mult) = match term.split_once('^') {
                Some((v, k)) => {
                    let value = parse_int(v.trim())?;
                    let k = k.trim();
                    let mult: usize = k
                        .parse()
                        .map_err(|_| ParseError::new(term, "multiplicity must be a positive integer"))?;
                    if mult == 0 {
                        return Err(ParseError::new(term, "multiplicity must be positive"));
                    }
                    (value, mult)
                }
                None => (parse_int(term)?, 1),
            };
            size = size
                .checked_add(mult)
                .ok_or_else(|| ParseError::new(term, "multiset too large"))?;
            let weight = i64::try_from(mult)
                .ok()
                .and_then(|m| value.checked_abs()?.checked_mul(m))
                .ok_or_else(|| ParseError::new(term, "values too large"))?;
            total = total
                .checked_add(weight)
                .ok_or_else(|| ParseError::new(term, "values too large"))?;
            m.insert(value, mult);
        }
        Ok(m)
    }
}

impl fmt::Display for StepMultiset {
    /// Largest value first: `1^3,-1^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, m)) in self.entries.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if *m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{m}")?;
            }
        }
        Ok(())
    }
}
