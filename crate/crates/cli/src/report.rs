//! JSON reports. Everything a report contains is a function of the
//! configuration alone (map keys are sorted, exact values are decimal
//! strings), so identical runs produce identical bytes; wall-clock time is
//! only recorded on request.

use std::collections::BTreeMap;

use serde::Serialize;

use specht_core::resolutions::{Homology, RankMethod};

pub const REPORT_VERSION: u32 = 1;

/// The configuration as echoed in a report: only what determines the result.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub command: String,
    pub n: usize,
    pub r: usize,
    pub lambda: Option<Vec<usize>>,
    pub ring: String,
    pub q: String,
    pub pool: String,
    pub checks: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimEntry {
    pub degree: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeEntry {
    pub degree: i64,
    pub dim: usize,
    pub rank_out: usize,
    pub rank_in: usize,
    pub betti: usize,
    /// Nonzero invariant factors of the incoming differential (integers only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant_factors: Option<Vec<String>>,
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyReport {
    pub method: String,
    pub betti: Vec<usize>,
    pub degrees: Vec<DegreeEntry>,
}

impl From<&Homology> for HomologyReport {
    fn from(h: &Homology) -> Self {
        let integral = h.method == RankMethod::Smith;
        HomologyReport {
            method: match h.method {
                RankMethod::Field => "field elimination",
                RankMethod::Modular => "modular ranks with exact certificate",
                RankMethod::Smith => "unit elimination and Smith normal form",
            }
            .to_string(),
            betti: h.bettis(),
            degrees: h
                .degrees
                .iter()
                .map(|d| DegreeEntry {
                    degree: d.degree,
                    dim: d.dim,
                    rank_out: d.rank_out,
                    rank_in: d.rank_in,
                    betti: d.betti,
                    invariant_factors: integral.then(|| d.factors_in.iter().map(ToString::to_string).collect()),
                    torsion: d.torsion.iter().map(ToString::to_string).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub status: Status,
    pub detail: String,
}

impl CheckResult {
    pub fn new(pass: bool, detail: impl Into<String>) -> Self {
        CheckResult { status: if pass { Status::Pass } else { Status::Fail }, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub version: u32,
    pub config: ConfigEcho,
    pub dims: Option<Vec<DimEntry>>,
    pub euler_characteristic: Option<i64>,
    pub d2_zero: Option<bool>,
    pub homology: Option<HomologyReport>,
    pub checks: BTreeMap<String, CheckResult>,
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerateReport {
    pub version: u32,
    pub config: ConfigEcho,
    pub compositions: Vec<String>,
    pub partitions: Vec<String>,
    pub schur_dimension: usize,
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CacheReport {
    pub version: u32,
    pub config: ConfigEcho,
    pub file: String,
    pub products: usize,
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Report {
    Check(CheckReport),
    Enumerate(EnumerateReport),
    Cache(CacheReport),
}

/// The report of a finished run.
pub struct Outcome {
    pub report: Report,
}

impl Outcome {
    pub fn set_elapsed(&mut self, ms: u64) {
        let slot = match &mut self.report {
            Report::Check(r) => &mut r.elapsed_ms,
            Report::Enumerate(r) => &mut r.elapsed_ms,
            Report::Cache(r) => &mut r.elapsed_ms,
        };
        *slot = Some(ms);
    }

    pub fn passed(&self) -> bool {
        match &self.report {
            Report::Check(r) => r.checks.values().all(|c| c.status == Status::Pass),
            _ => true,
        }
    }

    /// `name: detail` for every failed check.
    pub fn failures(&self) -> Vec<String> {
        match &self.report {
            Report::Check(r) => r
                .checks
                .iter()
                .filter(|(_, c)| c.status == Status::Fail)
                .map(|(name, c)| format!("{name}: {}", c.detail))
                .collect(),
            _ => Vec::new(),
        }
    }
}
