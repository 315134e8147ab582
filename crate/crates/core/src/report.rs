//! Structured outcomes of checks, serialized deterministically.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail { witness: String },
    Skipped { reason: String },
    Inconclusive { cap: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    #[serde(flatten)]
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl CheckOutcome {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            status: CheckStatus::Pass,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            status: CheckStatus::Fail { witness: witness.into() },
            detail: None,
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            status: CheckStatus::Skipped { reason: reason.into() },
            detail: None,
        }
    }

    pub fn inconclusive(name: impl Into<String>, cap: u64) -> Self {
        CheckOutcome {
            name: name.into(),
            status: CheckStatus::Inconclusive { cap },
            detail: None,
        }
    }

    /// Pass when `ok`, otherwise fail with the lazily built witness.
    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// Only a definite failure; an inconclusive search is not one.
    pub fn is_failure(&self) -> bool {
        matches!(self.status, CheckStatus::Fail { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self.status, CheckStatus::Inconclusive { .. })
    }
}

/// Invariants of one algebra. Missing entries were not computed or not
/// applicable; `None` for an exponent-like value means the search hit its cap.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub dim: usize,
    #[serde(rename = "N")]
    pub n: Option<u64>,
    #[serde(rename = "L")]
    pub l: Option<usize>,
    pub ord_s2: Option<u64>,
    pub exp: Option<u64>,
    pub qexp: Option<u64>,
    pub dual_chevalley: Option<bool>,
    pub theorem_pass: Option<bool>,
    pub corollary_pass: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub target: String,
    pub checks: Vec<CheckOutcome>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub invariants: Option<InvariantsReport>,
    /// Wall-clock milliseconds; the only nondeterministic field.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(target: impl Into<String>) -> Self {
        VerificationReport {
            target: target.into(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, c: CheckOutcome) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        !self.checks.iter().any(CheckOutcome::is_failure)
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| c.is_failure())
    }

    pub fn inconclusive(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| c.is_inconclusive())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable rendering, one line per check.
    pub fn render(&self) -> String {
        let mut out = format!("== {} ==\n", self.target);
        for c in &self.checks {
            let status = match &c.status {
                CheckStatus::Pass => "pass".to_string(),
                CheckStatus::Fail { witness } => format!("FAIL ({witness})"),
                CheckStatus::Skipped { reason } => format!("skipped ({reason})"),
                CheckStatus::Inconclusive { cap } => format!("INCONCLUSIVE (cap {cap})"),
            };
            out.push_str(&format!("  {:<40} {}", c.name, status));
            if let Some(d) = &c.detail {
                out.push_str(&format!("  [{d}]"));
            }
            out.push('\n');
        }
        if let Some(inv) = &self.invariants {
            let show = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
            out.push_str(&format!(
                "  invariants: dim={} N={} L={} ord(S^2)={} exp={} qexp={}\n",
                inv.dim,
                show(inv.n),
                inv.l.map_or("-".to_string(), |v| v.to_string()),
                show(inv.ord_s2),
                show(inv.exp),
                show(inv.qexp)
            ));
            for n in &inv.notes {
                out.push_str(&format!("  note: {n}\n"));
            }
        }
        out
    }
}
