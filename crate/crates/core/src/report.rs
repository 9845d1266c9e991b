//! Pass/fail records for identity suites.
//!
//! Timings are carried for the human-readable listing only; they are never
//! serialized, so two runs over the same input produce identical JSON.

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

/// Where an identity broke: the basis indices fed to both sides and what
/// each side evaluated to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub basis: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn new(basis: Vec<usize>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Witness {
            basis,
            lhs: lhs.into(),
            rhs: rhs.into(),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "basis {:?}: lhs = {}, rhs = {}", self.basis, self.lhs, self.rhs)?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Entry {
    pub fn pass(name: impl Into<String>) -> Self {
        Entry {
            name: name.into(),
            passed: true,
            witness: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        Entry {
            name: name.into(),
            passed: false,
            witness: Some(witness),
            elapsed: Duration::ZERO,
        }
    }

    /// Builds an entry from an optional counterexample.
    pub fn from_witness(name: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => Entry::pass(name),
            Some(w) => Entry::fail(name, w),
        }
    }

    pub fn timed(name: impl Into<String>, check: impl FnOnce() -> Option<Witness>) -> Self {
        let start = Instant::now();
        let witness = check();
        let mut entry = Entry::from_witness(name, witness);
        entry.elapsed = start.elapsed();
        entry
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// A non-identity observation attached to a report (classification flags,
/// dimensions, counts).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub key: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub entries: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub facts: Vec<Fact>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            passed: true,
            entries: Vec::new(),
            facts: Vec::new(),
        }
    }

    pub fn push(&mut self, entry: Entry) {
        self.passed &= entry.passed;
        self.entries.push(entry);
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl ToString) {
        self.facts.push(Fact {
            key: key.into(),
            value: value.to_string(),
        });
    }

    /// Appends every entry and fact of `other`, prefixing names with `prefix.`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut e in other.entries {
            if !prefix.is_empty() {
                e.name = format!("{prefix}.{}", e.name);
            }
            self.push(e);
        }
        for mut f in other.facts {
            if !prefix.is_empty() {
                f.key = format!("{prefix}.{}", f.key);
            }
            self.facts.push(f);
        }
    }

    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn fact_value(&self, key: &str) -> Option<&str> {
        self.facts.iter().find(|f| f.key == key).map(|f| f.value.as_str())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for fact in &self.facts {
            writeln!(f, "  {:<40} {}", fact.key, fact.value)?;
        }
        for e in &self.entries {
            let status = if e.passed { "PASS" } else { "FAIL" };
            write!(f, "  {status} {:<52} {:>9.3} ms", e.name, e.elapsed.as_secs_f64() * 1e3)?;
            if let Some(w) = &e.witness {
                write!(f, "\n       witness {w}")?;
            }
            writeln!(f)?;
        }
        let total = self.entries.len();
        let failed = self.failures().count();
        write!(f, "{} / {} identities hold", total - failed, total)
    }
}
