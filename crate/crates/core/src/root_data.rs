//! Positive roots and commutator tables for the D4, E6 and E8 quotients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fqfield::{FieldError, FieldSpec, FqElem};

const D4_TABLE: &str = include_str!("../data/d4.table");
const E6_TABLE: &str = include_str!("../data/e6.table");
const E8_TABLE: &str = include_str!("../data/e8.table");

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    D4,
    E6,
    E8,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::D4, Kind::E6, Kind::E8];

    /// The bad prime the constructions are built around.
    pub fn paired_prime(self) -> u32 {
        match self {
            Kind::D4 => 2,
            Kind::E6 => 3,
            Kind::E8 => 5,
        }
    }

    /// Simple-root coefficients of the highest root of the full root system.
    pub fn highest_root(self) -> &'static [u32] {
        match self {
            Kind::D4 => &[1, 2, 1, 1],
            Kind::E6 => &[1, 2, 2, 3, 2, 1],
            Kind::E8 => &[2, 3, 4, 6, 5, 4, 3, 2],
        }
    }

    fn file_stem(self) -> &'static str {
        match self {
            Kind::D4 => "d4",
            Kind::E6 => "e6",
            Kind::E8 => "e8",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Kind {
    type Err = TableError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "D4" => Ok(Kind::D4),
            "E6" => Ok(Kind::E6),
            "E8" => Ok(Kind::E8),
            _ => Err(TableError::UnknownKind(s.to_string())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("unknown root system kind {0:?}")]
    UnknownKind(String),
    #[error("table line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("table validation failed: {0:?}")]
    Invalid(Vec<String>),
    #[error("cannot read table override {0}: {1}")]
    Io(String, String),
    #[error("torus component {0} is zero")]
    ZeroTorus(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Root {
    pub index: usize,
    pub height: usize,
    pub coeffs: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemTable {
    pub kind: Kind,
    pub rank: usize,
    pub hmax: usize,
    roots: BTreeMap<usize, Root>,
    commutators: BTreeMap<(usize, usize), (usize, i8)>,
    order: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub kind: Kind,
    pub roots: usize,
    pub quotient_roots: usize,
    pub entries: usize,
    pub quotient_entries: usize,
    pub failures: Vec<String>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl RootSystemTable {
    /// Parses the text table format: `kind`, `rank`, `hmax`, `order`, `root i coeffs`,
    /// `comm i j k sign` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut kind = None;
        let mut rank = None;
        let mut hmax = None;
        let mut order = Vec::new();
        let mut roots = BTreeMap::new();
        let mut commutators = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| TableError::Parse { line: n + 1, msg: msg.to_string() };
            let words: Vec<&str> = line.split_whitespace().collect();
            let num = |w: &str| w.parse::<usize>().map_err(|_| err("expected integer"));
            match words[0] {
                "kind" => kind = Some(words.get(1).ok_or_else(|| err("missing kind"))?.parse()?),
                "rank" => rank = Some(num(words.get(1).ok_or_else(|| err("missing rank"))?)?),
                "hmax" => hmax = Some(num(words.get(1).ok_or_else(|| err("missing hmax"))?)?),
                "order" => order = words[1..].iter().map(|w| num(w)).collect::<Result<_, _>>()?,
                "root" if words.len() == 3 => {
                    let index = num(words[1])?;
                    let coeffs: Vec<u32> = words[2]
                        .chars()
                        .map(|c| c.to_digit(10).ok_or_else(|| err("bad coefficient")))
                        .collect::<Result<_, _>>()?;
                    let height = coeffs.iter().sum::<u32>() as usize;
                    roots.insert(index, Root { index, height, coeffs });
                }
                "comm" if words.len() == 5 => {
                    let sign = match words[4] {
                        "+" => 1,
                        "-" => -1,
                        _ => return Err(err("sign must be + or -")),
                    };
                    commutators.insert((num(words[1])?, num(words[2])?), (num(words[3])?, sign));
                }
                _ => return Err(err("unrecognized line")),
            }
        }
        let missing = |what: &str| TableError::Parse { line: 0, msg: format!("missing {what}") };
        let table = RootSystemTable {
            kind: kind.ok_or_else(|| missing("kind"))?,
            rank: rank.ok_or_else(|| missing("rank"))?,
            hmax: hmax.ok_or_else(|| missing("hmax"))?,
            roots,
            commutators,
            order,
        };
        let report = table.validate();
        if report.passed() {
            Ok(table)
        } else {
            Err(TableError::Invalid(report.failures))
        }
    }

    /// The embedded table, or `$UNICHAR_TABLE_DIR/<kind>.table` when that variable is set.
    pub fn load(kind: Kind) -> Result<Self, TableError> {
        if let Ok(dir) = std::env::var("UNICHAR_TABLE_DIR") {
            let path = std::path::Path::new(&dir).join(format!("{}.table", kind.file_stem()));
            if path.exists() {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| TableError::Io(path.display().to_string(), e.to_string()))?;
                return Self::parse(&text);
            }
        }
        Self::parse(Self::embedded_text(kind))
    }

    pub fn embedded_text(kind: Kind) -> &'static str {
        match kind {
            Kind::D4 => D4_TABLE,
            Kind::E6 => E6_TABLE,
            Kind::E8 => E8_TABLE,
        }
    }

    pub fn roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.values()
    }

    pub fn root(&self, i: usize) -> Option<&Root> {
        self.roots.get(&i)
    }

    pub fn height(&self, i: usize) -> usize {
        self.roots[&i].height
    }

    /// Normal-form order over all tabulated roots.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Normal-form order restricted to roots of height at most `hmax`.
    pub fn quotient_order(&self) -> Vec<usize> {
        self.order.iter().copied().filter(|&i| self.height(i) <= self.hmax).collect()
    }

    /// Entries exactly as tabulated.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), (usize, i8))> + '_ {
        self.commutators.iter().map(|(&k, &v)| (k, v))
    }

    /// [x_i(t), x_j(u)] = x_k(c t u), using (j, i) ↦ (k, -c) for the reversed pair.
    pub fn commutator(&self, i: usize, j: usize) -> Option<(usize, i8)> {
        if let Some(&v) = self.commutators.get(&(i, j)) {
            return Some(v);
        }
        self.commutators.get(&(j, i)).map(|&(k, c)| (k, -c))
    }

    /// The root with the given coefficient vector.
    pub fn find_root(&self, coeffs: &[u32]) -> Option<usize> {
        self.roots.values().find(|r| r.coeffs == coeffs).map(|r| r.index)
    }

    /// Roots of height `hmax`; central in the quotient.
    pub fn central_roots(&self) -> Vec<usize> {
        self.quotient_order().into_iter().filter(|&i| self.height(i) == self.hmax).collect()
    }

    pub fn validate(&self) -> TableReport {
        let mut failures = Vec::new();
        let expected = match self.kind {
            Kind::D4 => (4, 3),
            Kind::E6 => (6, 4),
            Kind::E8 => (8, 6),
        };
        if (self.rank, self.hmax) != expected {
            failures.push(format!("rank/hmax {:?} differ from {:?}", (self.rank, self.hmax), expected));
        }
        for r in self.roots.values() {
            if r.coeffs.len() != self.rank {
                failures.push(format!("root {} has {} coefficients", r.index, r.coeffs.len()));
            }
        }
        let mut sorted_order = self.order.clone();
        sorted_order.sort_unstable();
        if sorted_order != self.roots.keys().copied().collect::<Vec<_>>() {
            failures.push("order is not a permutation of the root indices".to_string());
        }
        let simple = self.roots.values().filter(|r| r.height == 1).count();
        if simple != self.rank {
            failures.push(format!("{simple} roots of height 1, expected {}", self.rank));
        }
        for (&(i, j), &(k, _)) in &self.commutators {
            match (self.roots.get(&i), self.roots.get(&j), self.roots.get(&k)) {
                (Some(a), Some(b), Some(c)) => {
                    let sum: Vec<u32> = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
                    if sum != c.coeffs {
                        failures.push(format!("entry ({i},{j}) -> {k}: root sum mismatch"));
                    }
                    if c.height != a.height + b.height {
                        failures.push(format!("entry ({i},{j}) -> {k}: height mismatch"));
                    }
                }
                _ => failures.push(format!("entry ({i},{j}) -> {k}: unknown root")),
            }
            if self.commutators.contains_key(&(j, i)) {
                failures.push(format!("pair ({i},{j}) tabulated in both orders"));
            }
        }
        let quotient = self.quotient_order();
        for &i in &quotient {
            for &j in &quotient {
                if i >= j {
                    continue;
                }
                let sum: Vec<u32> =
                    self.roots[&i].coeffs.iter().zip(&self.roots[&j].coeffs).map(|(x, y)| x + y).collect();
                if let Some(k) = self.find_root(&sum) {
                    if self.height(k) <= self.hmax && self.commutator(i, j).is_none() {
                        failures.push(format!("missing entry for ({i},{j}) -> {k}"));
                    }
                }
            }
        }
        let quotient_entries = self
            .commutators
            .values()
            .filter(|&&(k, _)| self.height(k) <= self.hmax)
            .count();
        TableReport {
            kind: self.kind,
            roots: self.roots.len(),
            quotient_roots: quotient.len(),
            entries: self.commutators.len(),
            quotient_entries,
            failures,
        }
    }

    /// Copy of the table with the sign of entry (i, j) flipped.
    pub fn with_flipped_sign(&self, i: usize, j: usize) -> Option<Self> {
        let mut t = self.clone();
        let entry = t.commutators.get_mut(&(i, j))?;
        entry.1 = -entry.1;
        Some(t)
    }

    /// ∏ t_j^{m_j} where m is the coefficient vector of root i.
    pub fn torus_weight(&self, field: &FieldSpec, i: usize, t: &[FqElem]) -> Result<FqElem, TableError> {
        if let Some(z) = t.iter().position(|x| x.is_zero()) {
            return Err(TableError::ZeroTorus(z));
        }
        let coeffs = &self.roots[&i].coeffs;
        Ok(coeffs
            .iter()
            .zip(t)
            .fold(field.one(), |acc, (&m, &tj)| field.mul(acc, field.pow(tj, m as u64))))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let roots: Vec<serde_json::Value> = self
            .order
            .iter()
            .map(|i| {
                let r = &self.roots[i];
                serde_json::json!({"i": r.index, "height": r.height, "coeffs": r.coeffs})
            })
            .collect();
        let comms: Vec<serde_json::Value> = self
            .commutators
            .iter()
            .map(|(&(i, j), &(k, c))| serde_json::json!({"i": i, "j": j, "k": k, "c": c}))
            .collect();
        serde_json::json!({
            "kind": self.kind.to_string(),
            "hmax": self.hmax,
            "roots": roots,
            "commutators": comms,
        })
    }
}

/// Primes dividing a coefficient of the highest root.
pub fn bad_primes(kind: Kind) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::new();
    for &c in kind.highest_root() {
        let mut n = c;
        let mut d = 2;
        while n > 1 {
            if n % d == 0 {
                if !out.contains(&d) {
                    out.push(d);
                }
                n /= d;
            } else {
                d += 1;
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_load() {
        for kind in Kind::ALL {
            let t = RootSystemTable::load(kind).unwrap();
            assert!(t.validate().passed());
        }
    }

    #[test]
    fn lookups() {
        let d4 = RootSystemTable::load(Kind::D4).unwrap();
        assert_eq!(d4.commutator(1, 3), Some((5, 1)));
        assert_eq!(d4.commutator(3, 1), Some((5, -1)));
        let e6 = RootSystemTable::load(Kind::E6).unwrap();
        assert_eq!(e6.commutator(4, 7), Some((12, -1)));
        assert_eq!(e6.commutator(1, 2), None);
    }

    #[test]
    fn bad_prime_sets() {
        assert_eq!(bad_primes(Kind::D4), vec![2]);
        assert_eq!(bad_primes(Kind::E6), vec![2, 3]);
        assert_eq!(bad_primes(Kind::E8), vec![2, 3, 5]);
    }

    #[test]
    fn parse_errors_are_reported() {
        assert!(matches!(RootSystemTable::parse("kind D4\nbogus"), Err(TableError::Parse { .. })));
        let bad = D4_TABLE.replace("comm 1 3 5 +", "comm 1 3 6 +");
        assert!(matches!(RootSystemTable::parse(&bad), Err(TableError::Invalid(_))));
    }
}
