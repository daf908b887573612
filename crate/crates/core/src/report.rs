//! Structured verification output shared by the library checks and the CLI.

use std::fmt::Write;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub name: String,
    pub status: Status,
    /// Value for informational entries; witness for failures.
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BierReport {
    pub command: String,
    pub entries: Vec<Entry>,
}

impl BierReport {
    pub fn new(command: impl Into<String>) -> Self {
        BierReport { command: command.into(), entries: Vec::new() }
    }

    fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) -> &mut Self {
        self.entries.push(Entry { name: name.into(), status, detail: detail.into() });
        self
    }

    /// Records a check; `detail` should carry the witness when `ok` is false.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) -> &mut Self {
        self.push(name, if ok { Status::Pass } else { Status::Fail }, detail)
    }

    pub fn info(&mut self, name: impl Into<String>, detail: impl Into<String>) -> &mut Self {
        self.push(name, Status::Info, detail)
    }

    /// Appends the entries of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: BierReport) -> &mut Self {
        for e in other.entries {
            let name = if prefix.is_empty() { e.name } else { format!("{prefix}.{}", e.name) };
            self.entries.push(Entry { name, ..e });
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn summary(&self) -> Summary {
        let passed = self.entries.iter().filter(|e| e.status == Status::Pass).count();
        let failed = self.entries.iter().filter(|e| e.status == Status::Fail).count();
        Summary { passed, failed, ok: failed == 0 }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# {}", self.command).unwrap();
        for e in &self.entries {
            let tag = match e.status {
                Status::Pass => "[pass]",
                Status::Fail => "[FAIL]",
                Status::Info => "[info]",
            };
            if e.detail.is_empty() {
                writeln!(out, "{tag} {}", e.name).unwrap();
            } else {
                writeln!(out, "{tag} {}: {}", e.name, e.detail).unwrap();
            }
        }
        let s = self.summary();
        writeln!(out, "summary: {} passed, {} failed", s.passed, s.failed).unwrap();
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(&self.document()).expect("report serializes")
    }

    /// The serializable form behind [`BierReport::render_json`].
    pub fn document(&self) -> ReportDocument<'_> {
        ReportDocument { command: &self.command, entries: &self.entries, summary: self.summary() }
    }
}

#[derive(Debug, Serialize)]
pub struct ReportDocument<'a> {
    pub command: &'a str,
    pub entries: &'a [Entry],
    pub summary: Summary,
}

/// `(a, b, c)` formatting used throughout the reports.
pub fn tuple<T: std::fmt::Display>(items: &[T]) -> String {
    format!("({})", items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}
