//! Structured pass/fail results for structure verification.

use std::fmt;

/// One violated law, with a human-readable witness (which identity failed
/// and where).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Name of the law that failed, e.g. `coassociativity`.
    pub law: String,
    /// Where it failed: a basis vector, an object pair, an axiom instance.
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at {})", self.law, self.witness)
    }
}

/// Outcome of verifying a structure: either clean or a list of violations,
/// in the deterministic order the checks ran.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict {
    pub failures: Vec<Violation>,
}

impl Verdict {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn push(&mut self, law: impl Into<String>, witness: impl Into<String>) {
        self.failures.push(Violation { law: law.into(), witness: witness.into() });
    }

    pub fn merge(&mut self, other: Verdict) {
        self.failures.extend(other.failures);
    }

    /// First violation, if any.
    pub fn first(&self) -> Option<&Violation> {
        self.failures.first()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "ok")
        } else {
            let lines: Vec<String> = self.failures.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", lines.join("; "))
        }
    }
}
