//! Obstructions to (concordance to) quasi-positivity, positivity and braid-positivity.
//!
//! Every test returns an [`ObstructionReport`]. A `Satisfied` verdict only means
//! that no obstruction was found.

mod checks;
mod classify;
mod data;

pub use checks::{
    check_concordance_qp, check_positive, check_positive_braid, check_positive_braid_stats, check_qp, Partitions,
};
pub use classify::{classify_alt_pure, classify_small_unlinking, AltPureVerdict, TorusFactor, UnlinkingFamily};
pub use data::LinkData;

use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TestId {
    ConcordanceQp,
    Qp,
    Positive,
    PositiveBraid,
}

impl TestId {
    pub fn name(self) -> &'static str {
        match self {
            TestId::ConcordanceQp => "concordance-qp",
            TestId::Qp => "qp",
            TestId::Positive => "positive",
            TestId::PositiveBraid => "positive-braid",
        }
    }

    fn negative_conclusion(self) -> &'static str {
        match self {
            TestId::ConcordanceQp => "not concordant to any quasi-positive link",
            TestId::Qp => "not quasi-positive",
            TestId::Positive => "not positive",
            TestId::PositiveBraid => "not the closure of a positive braid",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Satisfied,
    Violated,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Satisfied => "SATISFIED",
            Verdict::Violated => "VIOLATED",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    pub fn eval(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckRole {
    /// Must hold for the property; a failure is an obstruction.
    Condition,
    /// Hypothesis of a conditional test; a failure makes the test inapplicable.
    Hypothesis,
}

/// One integer comparison `lhs rel rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub role: CheckRole,
    pub lhs: i64,
    pub relation: Relation,
    pub rhs: i64,
    pub holds: bool,
}

impl Check {
    pub fn condition(label: impl Into<String>, lhs: i64, relation: Relation, rhs: i64) -> Self {
        Check { label: label.into(), role: CheckRole::Condition, lhs, relation, rhs, holds: relation.eval(lhs, rhs) }
    }

    pub fn hypothesis(label: impl Into<String>, lhs: i64, relation: Relation, rhs: i64) -> Self {
        Check { role: CheckRole::Hypothesis, ..Check::condition(label, lhs, relation, rhs) }
    }

    /// Re-evaluates the comparison from the recorded numbers.
    pub fn recheck(&self) -> bool {
        self.relation.eval(self.lhs, self.rhs) == self.holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub test: TestId,
    pub verdict: Verdict,
    pub conclusion: String,
    pub checks: Vec<Check>,
    pub missing: Vec<String>,
    pub provenance: Vec<String>,
}

impl ObstructionReport {
    /// Verdict from the checks: any failed condition is an obstruction; otherwise
    /// satisfied only if the hypotheses hold and nothing is missing.
    fn conclude(test: TestId, checks: Vec<Check>, missing: Vec<String>, provenance: Vec<String>) -> Self {
        let failed = checks.iter().any(|c| c.role == CheckRole::Condition && !c.holds);
        let hypothesis_ok = checks.iter().all(|c| c.role == CheckRole::Condition || c.holds);
        let has_condition = checks.iter().any(|c| c.role == CheckRole::Condition);
        let verdict = if failed {
            Verdict::Violated
        } else if hypothesis_ok && missing.is_empty() && has_condition {
            Verdict::Satisfied
        } else {
            Verdict::Inconclusive
        };
        ObstructionReport::with_verdict(test, verdict, checks, missing, provenance)
    }

    fn with_verdict(
        test: TestId,
        verdict: Verdict,
        checks: Vec<Check>,
        missing: Vec<String>,
        provenance: Vec<String>,
    ) -> Self {
        let conclusion = match verdict {
            Verdict::Violated => test.negative_conclusion().to_string(),
            Verdict::Satisfied => "no obstruction found".to_string(),
            Verdict::Inconclusive if checks.iter().any(|c| c.role == CheckRole::Hypothesis && !c.holds) => {
                "hypothesis not met".to_string()
            }
            Verdict::Inconclusive => "inconclusive".to_string(),
        };
        ObstructionReport { test, verdict, conclusion, checks, missing, provenance }
    }

    pub fn is_violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }

    /// True when every recorded check re-evaluates to its recorded outcome and
    /// the verdict follows from them.
    pub fn recheck(&self) -> bool {
        let failed = self.checks.iter().any(|c| c.role == CheckRole::Condition && !c.holds);
        self.checks.iter().all(Check::recheck) && (self.verdict == Verdict::Violated) == failed
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "test: {}", self.test.name())?;
        writeln!(f, "verdict: {}", self.verdict)?;
        writeln!(f, "conclusion: {}", self.conclusion)?;
        for c in &self.checks {
            let role = match c.role {
                CheckRole::Condition => "check",
                CheckRole::Hypothesis => "hypothesis",
            };
            let status = if c.holds { "ok" } else { "FAILS" };
            writeln!(f, "{}: {}: {} {} {} {}", role, c.label, c.lhs, c.relation.symbol(), c.rhs, status)?;
        }
        for m in &self.missing {
            writeln!(f, "missing: {}", m)?;
        }
        for p in &self.provenance {
            writeln!(f, "input: {}", p)?;
        }
        Ok(())
    }
}
