//! Solver outcomes and their JSON document form.

use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::mapping::Mapping;
use crate::poset::Poset;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Inconclusive,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Brute,
    Rand,
    Det,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Brute => "brute",
            Mode::Rand => "rand",
            Mode::Det => "det",
        })
    }
}

/// Instance parameters: `k = |P|`, `n = |Q|`, `s` the core-size bound and
/// `l` the number of colors each Q element can receive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub k: usize,
    pub n: usize,
    pub s: usize,
    pub l: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub answer: Answer,
    /// Present iff `answer` is yes; always verified.
    pub witness: Option<Mapping>,
    pub mode: Mode,
    pub trials_used: Option<u64>,
    pub family_size: Option<u64>,
    /// Probability bound on a wrong no (randomized mode only).
    pub error_bound: Option<f64>,
    pub elapsed: Duration,
    pub bounds: Bounds,
    /// Why the run was inconclusive, or other remarks.
    pub detail: Option<String>,
}

impl SolveReport {
    pub(crate) fn new(mode: Mode, bounds: Bounds) -> SolveReport {
        SolveReport {
            answer: Answer::Inconclusive,
            witness: None,
            mode,
            trials_used: None,
            family_size: None,
            error_bound: None,
            elapsed: Duration::ZERO,
            bounds,
            detail: None,
        }
    }

    pub(crate) fn yes(mut self, witness: Mapping) -> SolveReport {
        self.answer = Answer::Yes;
        self.witness = Some(witness);
        self
    }

    pub(crate) fn no(mut self) -> SolveReport {
        self.answer = Answer::No;
        self
    }

    pub(crate) fn inconclusive(mut self, detail: String) -> SolveReport {
        self.answer = Answer::Inconclusive;
        self.detail = Some(detail);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocumentBounds {
    pub k: usize,
    pub n: usize,
    pub s: usize,
    pub l: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family_size: Option<u64>,
}

/// Machine-readable report, field names fixed by schema version 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub answer: Answer,
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<(String, String)>>,
    pub bounds: DocumentBounds,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials_used: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error_bound: Option<f64>,
    pub elapsed_ms: f64,
}

impl ReportDocument {
    pub fn from_report(report: &SolveReport, p: &Poset, q: &Poset) -> ReportDocument {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            answer: report.answer,
            mode: report.mode,
            witness: report.witness.as_ref().map(|w| {
                w.token_pairs(p, q)
                    .into_iter()
                    .map(|(a, b)| (a.to_string(), b.to_string()))
                    .collect()
            }),
            bounds: DocumentBounds {
                k: report.bounds.k,
                n: report.bounds.n,
                s: report.bounds.s,
                l: report.bounds.l,
                family_size: report.family_size,
            },
            trials_used: report.trials_used,
            error_bound: report.error_bound,
            elapsed_ms: report.elapsed.as_secs_f64() * 1e3,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Compact JSON with `elapsed_ms` zeroed, for byte-level comparisons.
    pub fn to_json_without_timing(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = 0.0;
        serde_json::to_string(&copy).expect("report serializes")
    }

    /// Rebuilds the witness mapping against the posets it was computed for.
    pub fn witness_mapping(&self, p: &Poset, q: &Poset) -> Result<Option<Mapping>> {
        self.witness
            .as_ref()
            .map(|pairs| Mapping::from_token_pairs(p, q, pairs))
            .transpose()
    }
}
