//! Check reports shared by every verification suite.
//!
//! A [`Report`] is an ordered list of named entries. Entries come in two
//! kinds: checks, which carry a pass/fail verdict and count toward
//! [`Report::passed`], and notes, which record auxiliary observations
//! (enumeration sizes, observed-but-unclaimed properties) and never fail.
//! Entry order is the order the producing suite emitted them in, so renders
//! of the same report are byte-identical across runs.

use std::fmt;

/// Whether an entry asserts something or merely records it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    /// A verdict that counts toward the report's overall pass/fail.
    Check,
    /// An informational line; never counts as a failure.
    Note,
}

/// One named line of a report.
#[derive(Debug, Clone)]
pub struct Entry {
    /// Stable name, unique within the report.
    pub name: String,
    /// Verdict; always `true` for notes.
    pub passed: bool,
    /// Check or note.
    pub kind: EntryKind,
    /// Counterexample or detail text. Failing checks always carry one.
    pub witness: Option<String>,
}

/// An ordered collection of check results produced by one suite.
#[derive(Debug, Clone)]
pub struct Report {
    /// Suite name, used as the heading in plain rendering.
    pub title: String,
    /// Entries in emission order.
    pub entries: Vec<Entry>,
}

impl Report {
    /// Starts an empty report.
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    /// Records a passing check.
    pub fn pass(&mut self, name: impl Into<String>) {
        self.entries.push(Entry {
            name: name.into(),
            passed: true,
            kind: EntryKind::Check,
            witness: None,
        });
    }

    /// Records a failing check with its counterexample.
    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.entries.push(Entry {
            name: name.into(),
            passed: false,
            kind: EntryKind::Check,
            witness: Some(witness.into()),
        });
    }

    /// Records a check whose verdict is already computed; `witness` is kept
    /// only on failure.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl Into<String>) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness);
        }
    }

    /// Records an informational note.
    pub fn note(&mut self, name: impl Into<String>, text: impl Into<String>) {
        self.entries.push(Entry {
            name: name.into(),
            passed: true,
            kind: EntryKind::Note,
            witness: Some(text.into()),
        });
    }

    /// Appends every entry of `other`, prefixing names with `prefix.`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut e in other.entries {
            e.name = format!("{prefix}.{}", e.name);
            self.entries.push(e);
        }
    }

    /// True when no check entry failed. Notes are ignored.
    pub fn passed(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.kind == EntryKind::Note || e.passed)
    }

    /// Number of failing check entries.
    pub fn failures(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.kind == EntryKind::Check && !e.passed)
            .count()
    }

    /// First failing entry, if any.
    pub fn first_failure(&self) -> Option<&Entry> {
        self.entries
            .iter()
            .find(|e| e.kind == EntryKind::Check && !e.passed)
    }

    /// Machine-readable rendering: one `name<TAB>verdict<TAB>witness` line
    /// per entry, where the verdict is `pass`, `fail`, or `note`.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let verdict = match (e.kind, e.passed) {
                (EntryKind::Note, _) => "note",
                (EntryKind::Check, true) => "pass",
                (EntryKind::Check, false) => "fail",
            };
            let witness = e.witness.as_deref().unwrap_or("-");
            out.push_str(&format!("{}\t{}\t{}\n", e.name, verdict, witness));
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for e in &self.entries {
            match (e.kind, e.passed) {
                (EntryKind::Note, _) => {
                    writeln!(f, "  info  {}: {}", e.name, e.witness.as_deref().unwrap_or(""))?
                }
                (EntryKind::Check, true) => writeln!(f, "  ok    {}", e.name)?,
                (EntryKind::Check, false) => writeln!(
                    f,
                    "  FAIL  {}: {}",
                    e.name,
                    e.witness.as_deref().unwrap_or("no witness")
                )?,
            }
        }
        let failures = self.failures();
        if failures == 0 {
            writeln!(f, "  all checks passed")
        } else {
            writeln!(f, "  {failures} check(s) failed")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn notes_do_not_fail_reports() {
        let mut r = Report::new("demo");
        r.pass("a");
        r.note("count", "17");
        assert!(r.passed());
        r.fail("b", "witness x");
        assert!(!r.passed());
        assert_eq!(r.failures(), 1);
        assert_eq!(r.first_failure().unwrap().name, "b");
    }

    #[test]
    fn machine_rendering_is_tab_separated() {
        let mut r = Report::new("demo");
        r.pass("a");
        r.fail("b", "x != y");
        r.note("n", "3 cases");
        assert_eq!(r.render_machine(), "a\tpass\t-\nb\tfail\tx != y\nn\tnote\t3 cases\n");
    }
}
