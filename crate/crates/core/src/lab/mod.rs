//! Theorems as executable implications over finite structures.
//!
//! Each theorem is checked on every instance a structure offers (every proper
//! graded submodule, every pair, every triple zero, ...). An instance whose
//! hypothesis fails is a vacuous pass; one whose hypothesis cannot be decided
//! within the enumeration caps is undetermined.

mod search;
mod subject;
mod theorems;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use serde_json::Value;

use crate::classify::RingContext;
use crate::error::{Error, Result};
use crate::module::GradedModule;

pub use search::{search_separating_example, Family, SearchOutcome};
pub use subject::Subject;

/// Every theorem in the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    FaithfulEquivalence,
    CorXil,
    ColonLKg,
    ColonLK,
    AnnColon,
    HomPreimage,
    HomImage,
    QuotientDown,
    QuotientUp,
    TwoAbsColon,
    TripleZeroExists,
    NonTripleZero,
    IjlComponents,
    TripleZeroConsequences,
    CubeAnn,
    ProductProjection,
    ProductTripleAnn,
    MaximalPrime,
    TwoMaximal,
    ComparableOrZero,
    DuoCompletely,
    DuoChain,
    RadicalEquality,
}

impl Theorem {
    pub const ALL: [Theorem; 23] = [
        Theorem::FaithfulEquivalence,
        Theorem::CorXil,
        Theorem::ColonLKg,
        Theorem::ColonLK,
        Theorem::AnnColon,
        Theorem::HomPreimage,
        Theorem::HomImage,
        Theorem::QuotientDown,
        Theorem::QuotientUp,
        Theorem::TwoAbsColon,
        Theorem::TripleZeroExists,
        Theorem::NonTripleZero,
        Theorem::IjlComponents,
        Theorem::TripleZeroConsequences,
        Theorem::CubeAnn,
        Theorem::ProductProjection,
        Theorem::ProductTripleAnn,
        Theorem::MaximalPrime,
        Theorem::TwoMaximal,
        Theorem::ComparableOrZero,
        Theorem::DuoCompletely,
        Theorem::DuoChain,
        Theorem::RadicalEquality,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Theorem::FaithfulEquivalence => "thm-faithful-equivalence",
            Theorem::CorXil => "cor-xIL",
            Theorem::ColonLKg => "thm-colon-L-Kg",
            Theorem::ColonLK => "thm-colon-L-K",
            Theorem::AnnColon => "thm-ann-colon",
            Theorem::HomPreimage => "thm-hom-preimage",
            Theorem::HomImage => "thm-hom-image",
            Theorem::QuotientDown => "thm-quotient-down",
            Theorem::QuotientUp => "thm-quotient-up",
            Theorem::TwoAbsColon => "prop-2abs-colon",
            Theorem::TripleZeroExists => "prop-triple-zero-exists",
            Theorem::NonTripleZero => "prop-non-triple-zero",
            Theorem::IjlComponents => "prop-IJL-components",
            Theorem::TripleZeroConsequences => "thm-triple-zero-consequences",
            Theorem::CubeAnn => "prop-cube-ann",
            Theorem::ProductProjection => "thm-product-projection",
            Theorem::ProductTripleAnn => "thm-product-triple-ann",
            Theorem::MaximalPrime => "lem-maximal-prime",
            Theorem::TwoMaximal => "thm-two-maximal",
            Theorem::ComparableOrZero => "cor-comparable-or-zero",
            Theorem::DuoCompletely => "thm-duo-completely",
            Theorem::DuoChain => "thm-duo-chain",
            Theorem::RadicalEquality => "prop-radical-equality",
        }
    }

    /// Parses `all` or a comma-separated list of ids.
    pub fn parse_suite(s: &str) -> Result<Vec<Theorem>> {
        if s.trim() == "all" {
            return Ok(Theorem::ALL.to_vec());
        }
        s.split(',').map(|t| t.trim().parse()).collect()
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .iter()
            .copied()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::input(format!("unknown theorem `{s}`")))
    }
}

/// A hypothesis-satisfying instance whose conclusion failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub structure: String,
    pub instance: Value,
    pub detail: String,
}

/// Outcome of checking one theorem over one or more structures.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub instances_checked: u64,
    pub hypothesis_held: u64,
    pub vacuous: u64,
    pub undetermined: u64,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TheoremReport {
    pub fn new(theorem: Theorem) -> Self {
        Self {
            theorem: theorem.id().to_string(),
            instances_checked: 0,
            hypothesis_held: 0,
            vacuous: 0,
            undetermined: 0,
            violations: Vec::new(),
            note: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Folds another report for the same theorem into this one.
    pub fn merge(&mut self, other: TheoremReport) {
        self.instances_checked += other.instances_checked;
        self.hypothesis_held += other.hypothesis_held;
        self.vacuous += other.vacuous;
        self.undetermined += other.undetermined;
        self.violations.extend(other.violations);
        if self.note.is_none() {
            self.note = other.note;
        }
    }
}

/// Accumulates instance outcomes for one theorem on one structure.
pub(crate) struct Tally<'a> {
    structure: &'a str,
    report: TheoremReport,
}

impl<'a> Tally<'a> {
    fn new(theorem: Theorem, structure: &'a str) -> Self {
        Self {
            structure,
            report: TheoremReport::new(theorem),
        }
    }

    pub(crate) fn vacuous(&mut self) {
        self.report.instances_checked += 1;
        self.report.vacuous += 1;
    }

    pub(crate) fn undetermined(&mut self) {
        self.report.instances_checked += 1;
        self.report.undetermined += 1;
    }

    /// Records an instance whose hypothesis held.
    pub(crate) fn check(&mut self, ok: bool, instance: impl FnOnce() -> Value, detail: impl FnOnce() -> String) {
        self.report.instances_checked += 1;
        self.report.hypothesis_held += 1;
        if !ok {
            self.report.violations.push(Violation {
                structure: self.structure.to_string(),
                instance: instance(),
                detail: detail(),
            });
        }
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.report.note = Some(note.into());
    }
}

/// A named module together with its cached analyses.
pub struct CorpusEntry {
    pub name: String,
    pub module: Arc<GradedModule>,
}

/// Checks one theorem on one structure.
pub fn verify(theorem: Theorem, subject: &Subject) -> Result<TheoremReport> {
    let mut tally = Tally::new(theorem, subject.name());
    theorems::run(theorem, subject, &mut tally)?;
    Ok(tally.report)
}

/// Runs `suite` over `corpus`, one aggregated report per theorem in suite
/// order. Structures over the same ring share ring-level caches.
pub fn run_corpus(suite: &[Theorem], corpus: &[CorpusEntry]) -> Result<Vec<TheoremReport>> {
    let mut reports: Vec<TheoremReport> = suite.iter().map(|&t| TheoremReport::new(t)).collect();
    let mut rings: HashMap<usize, Arc<RingContext>> = HashMap::new();
    for entry in corpus {
        let key = Arc::as_ptr(entry.module.ring()) as usize;
        let rc = rings
            .entry(key)
            .or_insert_with(|| RingContext::new(entry.module.ring().clone()))
            .clone();
        let subject = Subject::with_ring(&entry.name, rc, entry.module.clone());
        for (report, &t) in reports.iter_mut().zip(suite) {
            report.merge(verify(t, &subject)?);
        }
    }
    Ok(reports)
}
