//! One report model, rendered as text or JSON.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// An expected value compared with the computed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub matched: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check { name: name.into(), matched: expected == actual, expected, actual }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entry {
    pub op: String,
    /// Human-readable findings, one per line.
    pub lines: Vec<String>,
    /// Structured findings.
    pub data: Value,
    pub checks: Vec<Check>,
}

impl Entry {
    pub fn new(op: impl Into<String>) -> Self {
        Entry { op: op.into(), lines: Vec::new(), data: Value::Null, checks: Vec::new() }
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(text.into());
        self
    }

    pub fn check(&mut self, name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> &mut Self {
        self.checks.push(Check::new(name, expected, actual));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub title: String,
    pub entries: Vec<Entry>,
    pub passed: bool,
}

impl Report {
    pub fn new(title: impl Into<String>, entries: Vec<Entry>) -> Self {
        let passed = entries.iter().flat_map(|e| &e.checks).all(|c| c.matched);
        Report { title: title.into(), entries, passed }
    }

    pub fn mismatches(&self) -> usize {
        self.entries.iter().flat_map(|e| &e.checks).filter(|c| !c.matched).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== {}", self.title);
        for entry in &self.entries {
            let _ = writeln!(out, "[{}]", entry.op);
            for line in &entry.lines {
                let _ = writeln!(out, "  {line}");
            }
            for c in &entry.checks {
                let mark = if c.matched { "ok" } else { "MISMATCH" };
                if c.matched {
                    let _ = writeln!(out, "  check {}: {} ... {mark}", c.name, c.actual);
                } else {
                    let _ = writeln!(out, "  check {}: expected {}, got {} ... {mark}", c.name, c.expected, c.actual);
                }
            }
        }
        let status = if self.passed { "ok".to_string() } else { format!("FAILED ({} mismatched)", self.mismatches()) };
        let _ = writeln!(out, "status: {status}");
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}
