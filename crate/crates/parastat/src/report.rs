//! Deterministic pass/fail reports shared by every check suite.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One named check with an optional failure witness.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// An ordered collection of check results for one algebra/degree/seed.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub algebra: String,
    pub degree: u32,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl CheckReport {
    pub fn new(algebra: impl Into<String>, degree: u32, seed: u64) -> CheckReport {
        CheckReport {
            algebra: algebra.into(),
            degree,
            seed,
            checks: Vec::new(),
        }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: CheckStatus::Pass,
            witness: None,
        });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: CheckStatus::Fail,
            witness: Some(witness.into()),
        });
    }

    pub fn record(&mut self, name: impl Into<String>, ok: bool, witness: impl Into<String>) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness);
        }
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "algebra={} degree={} seed={}\n",
            self.algebra, self.degree, self.seed
        ));
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => out.push_str(&format!("[PASS] {}\n", c.name)),
                CheckStatus::Fail => out.push_str(&format!(
                    "[FAIL] {}: {}\n",
                    c.name,
                    c.witness.as_deref().unwrap_or("")
                )),
            }
        }
        out
    }
}
