//! Reference tables of root sets, read from a plain-text file.
//!
//! ```text
//! # comment
//! [E6] Zu
//! 1 * * * 1 *
//! ```
//!
//! A section header names the type and a set: `W`, `Wstar`, `X`, `Y`, `Zu`,
//! `e1`, `e-1`, ..., `f2`, `f-2`, ..., `X1`, `Y1`. Each row lists one token
//! per Dynkin node in diagram reading order: the chain left to right
//! (α6..α3, α1 for E6; α7..α3, α1 for E7), then the branch node α2. A token
//! is an integer or `*`. A set is every positive root matching some row.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, RootSystemType};

/// Simple-root index printed at each position of a table row.
pub fn diagram_layout(kind: RootSystemType) -> &'static [usize] {
    match kind {
        RootSystemType::E6 => &[6, 5, 4, 3, 1, 2],
        RootSystemType::E7 => &[7, 6, 5, 4, 3, 1, 2],
    }
}

/// One row in Bourbaki order; `None` is a wildcard.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub coeffs: Vec<Option<i32>>,
    /// The row as written, for mismatch messages.
    pub text: String,
    pub line: usize,
}

impl Pattern {
    pub fn matches(&self, r: &Root) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_none_or(|c| r.coeff(i + 1) == c))
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(Option::is_some)
    }

    /// The root named by a wildcard-free row.
    pub fn root(&self) -> Option<Root> {
        let c: Option<Vec<i32>> = self.coeffs.iter().copied().collect();
        c.map(|c| Root::new(&c))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.text)
    }
}

#[derive(Clone, Debug, Default)]
pub struct GoldenTables {
    pub sets: BTreeMap<(RootSystemType, String), Vec<Pattern>>,
}

impl GoldenTables {
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = GoldenTables::default();
        let mut current: Option<(RootSystemType, String)> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            if let Some(rest) = body.strip_prefix('[') {
                let (kind, name) = rest.split_once(']').ok_or_else(|| Error::GoldenParse {
                    line,
                    msg: "unterminated header".into(),
                })?;
                let kind: RootSystemType = kind
                    .trim()
                    .parse()
                    .map_err(|e: String| Error::GoldenParse { line, msg: e })?;
                let name = name.trim();
                if name.is_empty() {
                    return Err(Error::GoldenParse {
                        line,
                        msg: "header names no set".into(),
                    });
                }
                let key = (kind, name.to_string());
                out.sets.entry(key.clone()).or_default();
                current = Some(key);
                continue;
            }
            let key = current.clone().ok_or_else(|| Error::GoldenParse {
                line,
                msg: "row before any section header".into(),
            })?;
            let layout = diagram_layout(key.0);
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if tokens.len() != layout.len() {
                return Err(Error::GoldenParse {
                    line,
                    msg: format!("expected {} tokens, found {}", layout.len(), tokens.len()),
                });
            }
            let mut coeffs = vec![None; layout.len()];
            for (tok, &node) in tokens.iter().zip(layout) {
                coeffs[node - 1] = match *tok {
                    "*" => None,
                    t => Some(t.parse::<i32>().map_err(|_| Error::GoldenParse {
                        line,
                        msg: format!("bad token `{t}`"),
                    })?),
                };
            }
            out.sets.get_mut(&key).expect("section").push(Pattern {
                coeffs,
                text: tokens.join(" "),
                line,
            });
        }
        Ok(out)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::GoldenParse {
            line: 0,
            msg: format!("{}: {e}", path.display()),
        })?;
        Self::parse(&text)
    }

    pub fn patterns(&self, kind: RootSystemType, name: &str) -> Option<&[Pattern]> {
        self.sets.get(&(kind, name.to_string())).map(Vec::as_slice)
    }

    pub fn names(&self, kind: RootSystemType) -> Vec<&str> {
        self.sets
            .keys()
            .filter(|(k, _)| *k == kind)
            .map(|(_, n)| n.as_str())
            .collect()
    }

    /// Positive roots matched by the named set.
    pub fn expand(&self, rs: &RootSystem, name: &str) -> Option<BTreeSet<Root>> {
        let pats = self.patterns(rs.kind(), name)?;
        Some(
            rs.positive_roots()
                .filter(|r| pats.iter().any(|p| p.matches(r)))
                .copied()
                .collect(),
        )
    }
}

/// Per-set comparison of a table against a derived root set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableComparison {
    pub name: String,
    pub derived: BTreeSet<Root>,
    pub table: BTreeSet<Root>,
    /// Cells at fault: rows matching no derived root, plus derived roots
    /// no row matches.
    pub mismatches: Vec<String>,
}

impl TableComparison {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn compare_set(rs: &RootSystem, tables: &GoldenTables, name: &str, derived: &BTreeSet<Root>) -> TableComparison {
    let mut mismatches = Vec::new();
    let table = match tables.expand(rs, name) {
        Some(t) => t,
        None => {
            mismatches.push(format!("[{}] {name}: section missing", rs.kind()));
            BTreeSet::new()
        }
    };
    for p in tables.patterns(rs.kind(), name).unwrap_or_default() {
        let hits = rs.positive_roots().filter(|r| p.matches(r)).count();
        if hits == 0 {
            mismatches.push(format!("[{}] {name} {p}: matches no root", rs.kind()));
        } else if !derived.iter().any(|r| p.matches(r)) {
            mismatches.push(format!("[{}] {name} {p}: matches no derived root", rs.kind()));
        }
    }
    for r in table.difference(derived) {
        mismatches.push(format!("[{}] {name}: table root {r} not derived", rs.kind()));
    }
    for r in derived.difference(&table) {
        mismatches.push(format!("[{}] {name}: derived root {r} not in table", rs.kind()));
    }
    TableComparison {
        name: name.to_string(),
        derived: derived.clone(),
        table,
        mismatches,
    }
}
