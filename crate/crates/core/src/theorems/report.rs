use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::permcore::{PermGroup, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatementId {
    TheoremA,
    TheoremB,
    Corollary,
    #[serde(rename = "lemma_1")]
    Lemma1,
    ProofTrace,
    Counterexample,
}

impl StatementId {
    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::TheoremA => "theorem_a",
            StatementId::TheoremB => "theorem_b",
            StatementId::Corollary => "corollary",
            StatementId::Lemma1 => "lemma_1",
            StatementId::ProofTrace => "proof_trace",
            StatementId::Counterexample => "counterexample",
        }
    }

    pub fn parse(s: &str) -> Option<StatementId> {
        [
            StatementId::TheoremA,
            StatementId::TheoremB,
            StatementId::Corollary,
            StatementId::Lemma1,
            StatementId::ProofTrace,
            StatementId::Counterexample,
        ]
        .into_iter()
        .find(|id| id.as_str() == s)
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisViolated,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::HypothesisViolated => "hypothesis_violated",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a failing check means for the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// A hypothesis of the statement; failure gives `hypothesis_violated`.
    Hypothesis,
    /// Part of the conclusion; failure gives `fail`.
    Claim,
    /// Must hold whatever the hypotheses; failure gives `fail`.
    Consistency,
    /// Recorded only.
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub statement_id: StatementId,
    pub subject: String,
    pub verdict: Verdict,
    pub hypotheses_ok: bool,
    /// Named subgroups as sorted element lists; single elements as
    /// one-element lists.
    pub computed: BTreeMap<String, Vec<Permutation>>,
    pub checks: Vec<Check>,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
    pub timing_ms: u64,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The JSON value without timing, for determinism comparisons.
    pub fn comparison_payload(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("reports always serialize");
        if let Some(obj) = v.as_object_mut() {
            obj.remove("timing_ms");
        }
        v
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| !c.passed && c.kind != CheckKind::Info)
    }
}

/// Accumulates checks; once a hypothesis fails, later claims are
/// downgraded to `Info` so no verdict is claimed for the conclusion.
pub(crate) struct ReportBuilder {
    statement_id: StatementId,
    subject: String,
    computed: BTreeMap<String, Vec<Permutation>>,
    checks: Vec<Check>,
    witnesses: Vec<String>,
    notes: Vec<String>,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(statement_id: StatementId, subject: impl Into<String>) -> Self {
        ReportBuilder {
            statement_id,
            subject: subject.into(),
            computed: BTreeMap::new(),
            checks: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            start: Instant::now(),
        }
    }

    pub fn hypotheses_ok(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.kind != CheckKind::Hypothesis || c.passed)
    }

    fn push(&mut self, name: &str, kind: CheckKind, passed: bool, detail: String) -> bool {
        self.checks.push(Check {
            name: name.to_string(),
            kind,
            passed,
            detail,
        });
        passed
    }

    pub fn hypothesis(&mut self, name: &str, passed: bool) -> bool {
        self.push(name, CheckKind::Hypothesis, passed, String::new())
    }

    pub fn claim(&mut self, name: &str, passed: bool) -> bool {
        self.claim_detail(name, passed, String::new())
    }

    pub fn claim_detail(&mut self, name: &str, passed: bool, detail: String) -> bool {
        let kind = if self.hypotheses_ok() {
            CheckKind::Claim
        } else {
            CheckKind::Info
        };
        self.push(name, kind, passed, detail)
    }

    pub fn consistency(&mut self, name: &str, passed: bool) -> bool {
        self.push(name, CheckKind::Consistency, passed, String::new())
    }

    pub fn info(&mut self, name: &str, passed: bool) -> bool {
        self.push(name, CheckKind::Info, passed, String::new())
    }

    pub fn checked(&mut self, name: &str, kind: CheckKind, passed: bool, detail: String) -> bool {
        self.push(name, kind, passed, detail)
    }

    pub fn group(&mut self, name: &str, g: &PermGroup) -> Result<()> {
        self.computed
            .insert(name.to_string(), g.elements()?.to_vec());
        Ok(())
    }

    pub fn elements(&mut self, name: &str, xs: Vec<Permutation>) {
        self.computed.insert(name.to_string(), xs);
    }

    pub fn witness(&mut self, w: impl Into<String>) {
        self.witnesses.push(w.into());
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    pub fn finish(self) -> VerificationReport {
        let hypotheses_ok = self.hypotheses_ok();
        let failed = |kind| self.checks.iter().any(|c| c.kind == kind && !c.passed);
        let verdict = if failed(CheckKind::Consistency) {
            Verdict::Fail
        } else if !hypotheses_ok {
            Verdict::HypothesisViolated
        } else if failed(CheckKind::Claim) {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        VerificationReport {
            statement_id: self.statement_id,
            subject: self.subject,
            verdict,
            hypotheses_ok,
            computed: self.computed,
            checks: self.checks,
            witnesses: self.witnesses,
            notes: self.notes,
            timing_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}
