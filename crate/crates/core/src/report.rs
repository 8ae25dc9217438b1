//! Verdicts and per-item results shared by all checkers.

use serde::Serialize;

use crate::matchcheck::MatchVerdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    /// The plain form holds but the strong (signed) form does not.
    HoldsNonstrictOnly,
    /// Nothing to check, e.g. no picky elements.
    VacuousPass,
    Skipped,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::HoldsNonstrictOnly => "holds-nonstrict-only",
            Verdict::VacuousPass => "vacuous-pass",
            Verdict::Skipped => "skipped",
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Holds | Verdict::VacuousPass)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    /// Usually a class name.
    pub label: String,
    pub passed: bool,
    pub detail: String,
    /// Class taxonomy where relevant, e.g. `good` or `bad`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching: Option<MatchVerdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub target: String,
    pub verdict: Verdict,
    pub items: Vec<CheckItem>,
    /// Observations that are reported but do not affect the verdict.
    pub findings: Vec<String>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: &str, target: impl Into<String>) -> CheckReport {
        CheckReport {
            name: name.to_string(),
            target: target.into(),
            verdict: Verdict::Holds,
            items: Vec::new(),
            findings: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn item(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem {
            label: label.into(),
            passed,
            detail: detail.into(),
            kind: None,
            status: None,
            matching: None,
        });
    }

    /// An item decided by a matching; `status` may be `HoldsNonstrictOnly` for strong checks.
    pub fn matched(
        &mut self,
        label: impl Into<String>,
        kind: Option<&str>,
        status: Verdict,
        detail: impl Into<String>,
        m: MatchVerdict,
    ) {
        self.items.push(CheckItem {
            label: label.into(),
            passed: status == Verdict::Holds,
            detail: detail.into(),
            kind: kind.map(str::to_string),
            status: Some(status),
            matching: Some(m),
        });
    }

    /// Sets the verdict from the items: holds when all passed, vacuous when there were none,
    /// holds-nonstrict-only when every failure is a strong failure with a weaker match.
    pub fn finish(mut self) -> CheckReport {
        self.verdict = if self.items.is_empty() {
            Verdict::VacuousPass
        } else if self.items.iter().all(|i| i.passed) {
            Verdict::Holds
        } else if self
            .items
            .iter()
            .all(|i| i.passed || i.status == Some(Verdict::HoldsNonstrictOnly))
        {
            Verdict::HoldsNonstrictOnly
        } else {
            Verdict::Fails
        };
        self
    }

    pub fn items_of_kind(&self, kind: &str) -> Vec<&CheckItem> {
        self.items
            .iter()
            .filter(|i| i.kind.as_deref() == Some(kind))
            .collect()
    }

    pub fn skipped(
        name: &str,
        target: impl Into<String>,
        reason: impl Into<String>,
    ) -> CheckReport {
        let mut r = CheckReport::new(name, target);
        r.verdict = Verdict::Skipped;
        r.notes.push(reason.into());
        r
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }

    pub fn failures(&self) -> Vec<&CheckItem> {
        self.items.iter().filter(|i| !i.passed).collect()
    }
}
