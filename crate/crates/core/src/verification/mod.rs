//! Executable checks binding each claimed construction to a measured value.

mod census;
mod d4;
mod e6;
mod e8;
mod field;
mod mutation;
mod properties;
mod reduction;
mod tower;

pub use census::{count_family, FamilyCount, Ratio};
pub use d4::suite_d4;
pub use e6::suite_e6;
pub use e8::suite_e8;
pub use field::verify_prop_fq;
pub use mutation::{designated_mutations, mutation_suite};
pub use properties::property_suite;
pub use reduction::verify_reduction_lemma;

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reported measurement that does not gate the suite.
    Info,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub anchor: String,
    pub status: Status,
    pub measured: Value,
    pub expected: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: Value,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub wall_time_ms: u128,
    #[serde(skip)]
    started: Option<Instant>,
}

/// Seed and sample sizes shared by all suites.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub budget: u128,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0x5eed, samples: 10_000, budget: 1 << 21 }
    }
}

impl SuiteReport {
    pub fn new(suite: &str, params: Value) -> Self {
        SuiteReport { suite: suite.to_string(), params, checks: Vec::new(), wall_time_ms: 0, started: Some(Instant::now()) }
    }

    pub fn finish(mut self) -> Self {
        if let Some(t) = self.started.take() {
            self.wall_time_ms = t.elapsed().as_millis();
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&mut self, anchor: &str, pass: bool, measured: impl Serialize, expected: impl Serialize, witness: Option<String>) {
        self.checks.push(Check {
            anchor: anchor.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            measured: json!(measured),
            expected: json!(expected),
            witness: if pass { None } else { witness },
        });
    }

    pub fn eq<T: Serialize + PartialEq>(&mut self, anchor: &str, measured: T, expected: T) {
        let pass = measured == expected;
        self.check(anchor, pass, measured, expected, None);
    }

    pub fn truth(&mut self, anchor: &str, pass: bool, witness: Option<String>) {
        self.check(anchor, pass, pass, true, witness);
    }

    pub fn info(&mut self, anchor: &str, measured: impl Serialize, expected: impl Serialize) {
        self.checks.push(Check {
            anchor: anchor.to_string(),
            status: Status::Info,
            measured: json!(measured),
            expected: json!(expected),
            witness: None,
        });
    }

    pub fn skip(&mut self, anchor: &str, note: &str) {
        self.checks.push(Check {
            anchor: anchor.to_string(),
            status: Status::Skipped,
            measured: Value::Null,
            expected: Value::Null,
            witness: Some(note.to_string()),
        });
    }

    /// Records an engine error as a failed check and returns the value otherwise.
    pub fn guard<T, E: std::fmt::Display>(&mut self, anchor: &str, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(anchor, false, "error", "ok", Some(e.to_string()));
                None
            }
        }
    }

    pub fn merge(&mut self, prefix: &str, other: SuiteReport) {
        for mut c in other.checks {
            c.anchor = format!("{prefix}.{}", c.anchor);
            self.checks.push(c);
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} {}\n", self.suite, self.params);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!("  {tag} {:<48} measured={} expected={}", c.anchor, c.measured, c.expected));
            if let Some(w) = &c.witness {
                out.push_str(&format!(" witness={w}"));
            }
            out.push('\n');
        }
        out.push_str(if self.passed() { "result: pass\n" } else { "result: FAIL\n" });
        out
    }
}
