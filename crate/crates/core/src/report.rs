//! Verification reports: one line per identity checked, with a witness on
//! failure.

use std::fmt;

use serde::Serialize;

/// A single verified identity. `anchor` is a stable identifier for the
/// axiom or relation being checked (e.g. "algebra.associativity").
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport { checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, anchor: impl Into<String>, pass: bool) {
        self.checks.push(Check {
            name: name.into(),
            anchor: anchor.into(),
            pass,
            witness: None,
        });
    }

    pub fn push_witnessed(
        &mut self,
        name: impl Into<String>,
        anchor: impl Into<String>,
        pass: bool,
        witness: Option<String>,
    ) {
        self.checks.push(Check {
            name: name.into(),
            anchor: anchor.into(),
            pass,
            witness: if pass { None } else { witness },
        });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    /// Stable emission order.
    pub fn sorted(mut self) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {} ({})",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.anchor
            )?;
            if let Some(w) = &c.witness {
                writeln!(f, "       witness: {w}")?;
            }
        }
        Ok(())
    }
}
