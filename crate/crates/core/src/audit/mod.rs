//! Exhaustive audits of the tables against the proofs' weight arithmetic.

pub mod checks;
pub mod spectral;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::tables::printed::Discrepancy;
use crate::weight::Weight;

pub use checks::{audit_btau_oracle, audit_h2_parity, audit_induced, audit_restriction_consistency, audit_weightform};
pub use spectral::{audit_b_r2, audit_g_r2_simple, audit_g_s_simple, E01Rule};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub weight: Weight,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AuditReport {
    pub scope: String,
    pub params: BTreeMap<String, String>,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
    pub stats: BTreeMap<String, u64>,
    /// Stored facts the audit relied on.
    pub axioms: BTreeSet<String>,
    /// Observations that do not fail the audit.
    pub findings: Vec<String>,
    pub discrepancies: Vec<Discrepancy>,
}

impl AuditReport {
    pub fn new(scope: impl Into<String>, params: BTreeMap<String, String>) -> Self {
        AuditReport { scope: scope.into(), params, ..Default::default() }
    }

    pub fn bump(&mut self, key: impl Into<String>) {
        *self.stats.entry(key.into()).or_default() += 1;
    }

    pub fn fail(&mut self, weight: Weight, expected: impl ToString, actual: impl ToString) {
        self.counterexamples.push(Counterexample { weight, expected: expected.to_string(), actual: actual.to_string() });
    }

    pub fn absorb(&mut self, other: AuditReport) {
        self.counterexamples.extend(other.counterexamples);
        for (k, v) in other.stats {
            *self.stats.entry(k).or_default() += v;
        }
        self.axioms.extend(other.axioms);
        self.findings.extend(other.findings);
        self.discrepancies.extend(other.discrepancies);
    }

    pub fn finish(mut self) -> Self {
        self.passed = self.counterexamples.is_empty();
        self
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "{} [{}]: {}", self.scope, params.join(" "), if self.passed { "PASS" } else { "FAIL" })?;
        for (k, v) in &self.stats {
            writeln!(f, "  {k}: {v}")?;
        }
        for a in &self.axioms {
            writeln!(f, "  axiom: {a}")?;
        }
        for n in &self.findings {
            writeln!(f, "  finding: {n}")?;
        }
        for d in &self.discrepancies {
            let i = d.i.map_or(String::new(), |i| format!(" i={i}"));
            writeln!(
                f,
                "  printed form {:?} row {} ({:?}, s={}{i}): printed {} vs tau-form {}",
                d.table, d.row, d.kind, d.s, d.printed, d.resolved
            )?;
        }
        for c in self.counterexamples.iter().take(20) {
            writeln!(f, "  counterexample {}: expected {} got {}", c.weight, c.expected, c.actual)?;
        }
        if self.counterexamples.len() > 20 {
            writeln!(f, "  ... {} more", self.counterexamples.len() - 20)?;
        }
        Ok(())
    }
}

/// Runs `f` on every item in parallel and merges the partial reports in input order.
pub(crate) fn fold_parallel<T, F>(report: &mut AuditReport, items: &[T], f: F)
where
    T: Sync,
    F: Fn(&T) -> AuditReport + Sync + Send,
{
    use rayon::prelude::*;
    let parts: Vec<AuditReport> = items.par_iter().map(f).collect();
    for p in parts {
        report.absorb(p);
    }
}
