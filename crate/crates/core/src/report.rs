//! Verification reports: a flat, ordered list of exact checks.

use std::fmt;

use serde::Serialize;

use crate::linalg::{format_rational, Rational};
use crate::rootsys::{Root, RootSystemType};

/// A value compared by a check. Rationals are carried as `p/q` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Text(String),
    List(Vec<Value>),
}

impl Value {
    pub fn rational(q: &Rational) -> Self {
        Value::Text(format_rational(q))
    }

    pub fn roots<'a>(roots: impl IntoIterator<Item = &'a Root>) -> Self {
        Value::List(roots.into_iter().map(|r| Value::Text(r.to_string())).collect())
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Text(s) => f.write_str(s),
            Value::List(items) => {
                f.write_str("[")?;
                for (i, v) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl From<i32> for Value {
    fn from(n: i32) -> Self {
        Value::Int(n as i64)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as i64)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<Root> for Value {
    fn from(r: Root) -> Self {
        Value::Text(r.to_string())
    }
}

impl From<&Rational> for Value {
    fn from(q: &Rational) -> Self {
        Value::rational(q)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(items: Vec<T>) -> Self {
        Value::List(items.into_iter().map(Into::into).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Disagreement with transcribed reference data.
    Flagged,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Flagged => "flagged",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// The statement this check exercises.
    pub anchor: String,
    pub expected: Value,
    pub actual: Value,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
}

impl Check {
    /// Pass exactly when `expected == actual`.
    pub fn compare(name: &str, anchor: &str, expected: impl Into<Value>, actual: impl Into<Value>) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        let status = if expected == actual {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            expected,
            actual,
            status,
            details: Vec::new(),
        }
    }

    /// A check that expects `defects` to be empty and lists them otherwise.
    pub fn no_defects(name: &str, anchor: &str, defects: Vec<String>) -> Self {
        let mut c = Check::compare(name, anchor, 0usize, defects.len());
        c.details = defects;
        c
    }

    /// Failure caused by an error before the value could be computed.
    pub fn error(name: &str, anchor: &str, expected: impl Into<Value>, err: impl fmt::Display) -> Self {
        Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            expected: expected.into(),
            actual: Value::Text(format!("error: {err}")),
            status: CheckStatus::Fail,
            details: Vec::new(),
        }
    }

    /// Downgrade a failure to `Flagged`.
    pub fn flag_on_mismatch(mut self) -> Self {
        if self.status == CheckStatus::Fail {
            self.status = CheckStatus::Flagged;
        }
        self
    }

    pub fn with_details(mut self, details: Vec<String>) -> Self {
        self.details = details;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "type")]
    pub kind: RootSystemType,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(kind: RootSystemType) -> Self {
        VerificationReport {
            kind,
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, check: Check) {
        match check.status {
            CheckStatus::Pass => self.summary.pass += 1,
            CheckStatus::Fail => self.summary.fail += 1,
            CheckStatus::Flagged => self.summary.flagged += 1,
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    /// True when no check failed or was flagged.
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.flagged == 0
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} verification\n", self.kind);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            out.push_str(&format!(
                "  {:<7} {:<width$}  expected {}  actual {}\n",
                format!("[{}]", c.status),
                c.name,
                c.expected,
                c.actual
            ));
            for d in &c.details {
                out.push_str(&format!("          - {d}\n"));
            }
        }
        out.push_str(&format!(
            "{}: {} pass, {} fail, {} flagged\n",
            self.kind, self.summary.pass, self.summary.fail, self.summary.flagged
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_json() {
        let r = VerificationReport::new(RootSystemType::E6);
        assert_eq!(
            r.to_json(),
            r#"{"type":"E6","checks":[],"summary":{"pass":0,"fail":0,"flagged":0}}"#
        );
    }

    #[test]
    fn compare_sets_status_and_counts() {
        let mut r = VerificationReport::new(RootSystemType::E7);
        r.push(Check::compare("a", "x", 1usize, 1usize));
        r.push(Check::compare("b", "x", 1usize, 2usize));
        r.push(Check::compare("c", "x", true, false).flag_on_mismatch());
        assert_eq!(
            r.summary,
            Summary {
                pass: 1,
                fail: 1,
                flagged: 1
            }
        );
        assert!(!r.all_passed());
        assert!(r.to_text().contains("[fail]"));
    }

    #[test]
    fn rational_values_are_strings() {
        let q = crate::linalg::ratio(-6, 4);
        assert_eq!(serde_json::to_string(&Value::rational(&q)).unwrap(), "\"-3/2\"");
    }
}
