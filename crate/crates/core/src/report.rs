//! Machine-readable outcomes of validators and theorem checks.

use serde::Serialize;

/// A single violating tuple with both sides of the broken identity.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Violation {
    pub tuple: Vec<String>,
    pub left: String,
    pub right: String,
}

/// Outcome of one exhaustive check: identifier, enumeration count, and every
/// violating tuple (empty iff the check passed).
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl Check {
    pub fn new(id: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            checked: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violate(&mut self, tuple: Vec<String>, left: String, right: String) {
        self.violations.push(Violation { tuple, left, right });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Deterministic output order regardless of how the enumeration was run.
    pub fn sort_violations(&mut self) {
        self.violations
            .sort_by(|a, b| (&a.tuple, &a.left).cmp(&(&b.tuple, &b.left)));
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!("{}: pass ({} tuples)", self.id, self.checked)
        } else {
            format!(
                "{}: FAIL ({} violations / {} tuples; first: {:?} left={} right={})",
                self.id,
                self.violations.len(),
                self.checked,
                self.violations[0].tuple,
                self.violations[0].left,
                self.violations[0].right
            )
        }
    }
}
