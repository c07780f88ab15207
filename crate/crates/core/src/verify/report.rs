use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cli::IdealSpec;
use crate::monocech::MonomialIdeal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        })
    }
}

/// A machine-readable reproduction of a failing (or notable) check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub ideal: IdealSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    pub detail: String,
}

impl Witness {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        Witness {
            ideal: IdealSpec::from_ideal(ideal),
            index: None,
            alpha: None,
            degree: None,
            detail: String::new(),
        }
    }

    pub fn index(mut self, i: usize) -> Self {
        self.index = Some(i);
        self
    }

    pub fn alpha(mut self, alpha: Vec<i64>) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn degree(mut self, n: i64) -> Self {
        self.degree = Some(n);
        self
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    /// The case the check ran on; empty for standalone checks.
    #[serde(default)]
    pub case: String,
    pub name: String,
    /// The property being checked, in words.
    pub property: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn pass(name: &str, property: &str) -> Self {
        CheckResult {
            case: String::new(),
            name: name.into(),
            property: property.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn skip(name: &str, property: &str, why: Witness) -> Self {
        CheckResult {
            status: Status::Skip,
            witness: Some(why),
            ..Self::pass(name, property)
        }
    }

    pub fn fail(name: &str, property: &str, witness: Witness) -> Self {
        CheckResult {
            status: Status::Fail,
            witness: Some(witness),
            ..Self::pass(name, property)
        }
    }

    /// Pass if `ok`, otherwise fail with the lazily built witness.
    pub fn check(name: &str, property: &str, ok: bool, witness: impl FnOnce() -> Witness) -> Self {
        if ok {
            Self::pass(name, property)
        } else {
            Self::fail(name, property, witness())
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub entries: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn push(&mut self, entry: CheckResult) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    /// Labels every entry that has no case yet.
    pub fn with_case(mut self, case: &str) -> Self {
        for e in &mut self.entries {
            if e.case.is_empty() {
                e.case = case.to_string();
            }
        }
        self
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let case = if e.case.is_empty() {
                String::new()
            } else {
                format!("[{}] ", e.case)
            };
            writeln!(f, "{:4}  {case}{} ({})", e.status, e.name, e.property)?;
            if let (Status::Fail, Some(w)) = (e.status, &e.witness) {
                let json = serde_json::to_string(w).expect("witness serializes");
                writeln!(f, "      witness: {json}")?;
            }
        }
        write!(
            f,
            "{} passed, {} failed, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        )
    }
}
