//! Permutation schedules: a permutation `phi_k` of `{1..k}` for every `k >= 1`,
//! used to order the arrows that start at level 0.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Builtin {
    /// `k k-1 ... 1`; recovers the classical sweep map.
    Reverse,
    Identity,
    /// `1 k k-1 ... 2`.
    Cycle,
}

impl Builtin {
    pub fn name(self) -> &'static str {
        match self {
            Builtin::Reverse => "reverse",
            Builtin::Identity => "identity",
            Builtin::Cycle => "cycle",
        }
    }

    fn one_line(self, k: usize) -> Vec<usize> {
        match self {
            Builtin::Reverse => (1..=k).rev().collect(),
            Builtin::Identity => (1..=k).collect(),
            Builtin::Cycle => (1..=k.min(1)).chain((2..=k).rev()).collect(),
        }
    }
}

impl FromStr for Builtin {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "reverse" => Ok(Builtin::Reverse),
            "identity" => Ok(Builtin::Identity),
            "cycle" => Ok(Builtin::Cycle),
            other => Err(ParseError::new(
                other,
                "unknown schedule (expected reverse, identity, cycle or a JSON table)",
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Rule {
    Builtin(Builtin),
    Table {
        default: Builtin,
        table: BTreeMap<usize, Vec<usize>>,
    },
    Lifted(Box<PermSchedule>),
}

/// A total rule `k -> phi_k`. Permutations are in one-line notation with
/// 1-based entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermSchedule {
    rule: Rule,
}

impl PermSchedule {
    pub fn builtin(b: Builtin) -> Self {
        Self { rule: Rule::Builtin(b) }
    }

    pub fn reverse() -> Self {
        Self::builtin(Builtin::Reverse)
    }

    pub fn identity() -> Self {
        Self::builtin(Builtin::Identity)
    }

    pub fn cycle() -> Self {
        Self::builtin(Builtin::Cycle)
    }

    /// Explicit permutations for some `k`, falling back to `default`
    /// elsewhere. Every entry is validated.
    pub fn table(default: Builtin, table: BTreeMap<usize, Vec<usize>>) -> Result<Self, Error> {
        for (&k, perm) in &table {
            validate_permutation(k, perm)?;
        }
        Ok(Self {
            rule: Rule::Table { default, table },
        })
    }

    /// `phi'_1 = 1` and `phi'_{k+1} = 1 (s_1+1) ... (s_k+1)` where
    /// `phi_k = s_1 ... s_k`.
    pub fn lift(&self) -> Self {
        Self {
            rule: Rule::Lifted(Box::new(self.clone())),
        }
    }

    /// `phi_k` in one-line notation.
    pub fn phi(&self, k: usize) -> Vec<usize> {
        match &self.rule {
            Rule::Builtin(b) => b.one_line(k),
            Rule::Table { default, table } => match table.get(&k) {
                Some(p) => p.clone(),
                None => default.one_line(k),
            },
            Rule::Lifted(inner) => {
                if k == 0 {
                    return Vec::new();
                }
                let mut out = Vec::with_capacity(k);
                out.push(1);
                out.extend(inner.phi(k - 1).into_iter().map(|s| s + 1));
                out
            }
        }
    }

    /// `phi_k^{-1}` in one-line notation.
    pub fn phi_inverse(&self, k: usize) -> Vec<usize> {
        let phi = self.phi(k);
        let mut inv = vec![0; k];
        for (pos, &v) in phi.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        inv
    }

    /// Short description: `reverse`, `table`, `lift(identity)`, ...
    pub fn name(&self) -> String {
        match &self.rule {
            Rule::Builtin(b) => b.name().to_string(),
            Rule::Table { .. } => "table".to_string(),
            Rule::Lifted(inner) => format!("lift({})", inner.name()),
        }
    }

    pub fn as_builtin(&self) -> Option<Builtin> {
        match self.rule {
            Rule::Builtin(b) => Some(b),
            _ => None,
        }
    }

    /// JSON document for table schedules; `None` for builtins and lifts.
    pub fn to_json(&self) -> Option<String> {
        match &self.rule {
            Rule::Table { default, table } => {
                let doc = TableDoc {
                    default: Some(*default),
                    table: table.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
                };
                serde_json::to_string(&doc).ok()
            }
            _ => None,
        }
    }

    /// Parses either a builtin name or a JSON table document
    /// `{"default": "reverse", "table": {"3": [1, 3, 2]}}`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let trimmed = s.trim();
        if !trimmed.starts_with('{') {
            return Ok(Self::builtin(trimmed.parse()?));
        }
        let doc: TableDoc = serde_json::from_str(trimmed).map_err(|e| ParseError::new(trimmed, e.to_string()))?;
        let mut table = BTreeMap::new();
        for (key, perm) in doc.table {
            let k: usize = key
                .trim()
                .parse()
                .ok()
                .filter(|&k| k > 0)
                .ok_or_else(|| ParseError::new(key.clone(), "table keys must be positive integers"))?;
            if table.insert(k, perm).is_some() {
                return Err(ParseError::new(key, "duplicate table key").into());
            }
        }
        Self::table(doc.default.unwrap_or(Builtin::Reverse), table)
    }
}

impl fmt::Display for PermSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl From<Builtin> for PermSchedule {
    fn from(b: Builtin) -> Self {
        Self::builtin(b)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    #[serde(default)]
    default: Option<Builtin>,
    table: BTreeMap<String, Vec<usize>>,
}

fn validate_permutation(k: usize, perm: &[usize]) -> Result<(), Error> {
    let bad = |reason: String| Error::InvalidPermutation { k, reason };
    if k == 0 {
        return Err(bad("k must be positive".into()));
    }
    if perm.len() != k {
        return Err(bad(format!("expected {k} entries, found {}", perm.len())));
    }
    let mut seen = vec![false; k];
    for &v in perm {
        if v == 0 || v > k {
            return Err(bad(format!("entry {v} outside 1..={k}")));
        }
        if std::mem::replace(&mut seen[v - 1], true) {
            return Err(bad(format!("entry {v} repeated")));
        }
    }
    Ok(())
}
