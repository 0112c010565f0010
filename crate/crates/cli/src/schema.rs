//! Serialized shapes. Field order is part of the output format: JSON keys and
//! CSV columns appear exactly in declaration order.

use std::time::Duration;

use circdom_core::bounds::{dominating_envelope, method_envelope};
use circdom_core::verify::{closed_lower_bound, gamma_lower_bound};
use circdom_core::DominationReport;
use serde::Serialize;

/// Uncovered vertices listed in a report; the count is always exact.
pub const UNCOVERED_LISTING_CAP: usize = 1000;

/// Milliseconds at microsecond resolution.
pub fn wall_ms(d: Duration) -> f64 {
    d.as_micros() as f64 / 1000.0
}

#[derive(Debug, Clone, Serialize)]
pub struct ChordSourceJson {
    pub kind: &'static str,
    pub path: Option<String>,
    pub seed: Option<u64>,
    pub symmetric: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParamsJson {
    #[serde(rename = "L")]
    pub l: u64,
    pub prime_count: usize,
    pub w_size: usize,
    pub u_size: Option<usize>,
    pub lambda: Option<f64>,
    pub card_hypothesis: bool,
    pub l_capped: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RngJson {
    pub name: &'static str,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub method: &'static str,
    pub n: u64,
    pub k: usize,
    pub r: u32,
    pub chords: ChordSourceJson,
    pub size: usize,
    pub verified: bool,
    pub uncovered_count: usize,
    pub uncovered: Vec<u64>,
    pub wall_ms: Option<f64>,
    pub parameters: Option<ParamsJson>,
    pub dominating_envelope: f64,
    pub ratio_vs_envelope: f64,
    pub method_envelope: f64,
    pub ratio_vs_method_envelope: f64,
    pub lower_bound: f64,
    pub lower_bound_closed: f64,
    pub rng: Option<RngJson>,
    pub dominating_set: Vec<u64>,
}

impl ReportJson {
    pub fn new(report: &DominationReport, chords: ChordSourceJson, psi: f64, timing: bool) -> Self {
        let size = report.size();
        let envelope = dominating_envelope(report.n, report.k);
        let own = method_envelope(report.method, report.n, report.k, psi);
        Self {
            method: report.method.as_str(),
            n: report.n,
            k: report.k,
            r: report.r,
            chords,
            size,
            verified: report.verified,
            uncovered_count: report.uncovered_count(),
            uncovered: report.uncovered.iter().take(UNCOVERED_LISTING_CAP).collect(),
            wall_ms: timing.then(|| wall_ms(report.wall_time)),
            parameters: report.params.as_ref().map(|p| ParamsJson {
                l: p.l,
                prime_count: p.prime_count,
                w_size: p.w_size,
                u_size: p.u_size,
                lambda: p.lambda,
                card_hypothesis: p.card_hypothesis,
                l_capped: p.l_capped,
            }),
            dominating_envelope: envelope,
            ratio_vs_envelope: size as f64 / envelope,
            method_envelope: own,
            ratio_vs_method_envelope: size as f64 / own,
            lower_bound: gamma_lower_bound(report.n, report.k),
            lower_bound_closed: closed_lower_bound(report.n, report.k),
            rng: report.rng.map(|(name, seed)| RngJson { name, seed }),
            dominating_set: report.set.to_vec(),
        }
    }
}

/// One row of the timing sweep.
#[derive(Debug, Clone, Default, Serialize)]
pub struct BenchRow {
    pub n: u64,
    pub k: usize,
    pub method: String,
    pub seed: u64,
    pub size: Option<usize>,
    pub wall_ms: Option<f64>,
    pub verified: Option<bool>,
    #[serde(rename = "L")]
    pub l: Option<u64>,
    pub w_size: Option<usize>,
    pub u_size: Option<usize>,
    pub ratio_vs_envelope: Option<f64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GammaJson {
    pub n: u64,
    pub k: usize,
    pub chords: Vec<u64>,
    pub gamma: u32,
    pub lower_bound: f64,
    pub lower_bound_closed: f64,
    pub meets_lower_bound: bool,
    pub meets_closed_bound: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CardLine {
    pub check: &'static str,
    pub n: u64,
    #[serde(rename = "L")]
    pub l: u64,
    pub prime_count: usize,
    pub w_size: usize,
    pub expected: u64,
    pub hypothesis: bool,
    pub pass: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpSumLine {
    pub check: &'static str,
    pub n: u64,
    #[serde(rename = "L")]
    pub l: u64,
    pub w_size: usize,
    pub max_abs: f64,
    pub argmax_a: u64,
    pub bound: f64,
    pub ratio: f64,
    pub parseval_rel_err: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExceptionalLine {
    pub check: &'static str,
    pub n: u64,
    pub k: usize,
    pub trial: u64,
    pub seed: u64,
    #[serde(rename = "L")]
    pub l: u64,
    pub prime_count: usize,
    pub w_size: usize,
    pub u_size: usize,
    pub bound: f64,
    pub ratio: f64,
    pub size: usize,
    pub envelope: f64,
    pub size_ratio: f64,
    pub dominated: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConstantsJson {
    pub c: f64,
    #[serde(rename = "C")]
    pub big_c: f64,
    pub c0: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CalibrationJson {
    #[serde(rename = "L")]
    pub l: u64,
    pub prime_count: usize,
    pub c_max: f64,
    pub c0_sup: f64,
    #[serde(rename = "C_max")]
    pub big_c_max: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct NuLine {
    pub check: &'static str,
    pub n: u64,
    pub k: usize,
    pub trials: u64,
    pub seed: u64,
    pub constants_given: ConstantsJson,
    pub hypothesis_met: bool,
    pub hypothesis_failure: Option<String>,
    pub calibration: Option<CalibrationJson>,
    pub constants_used: Option<ConstantsJson>,
    #[serde(rename = "L")]
    pub l: Option<u64>,
    pub prime_count: Option<usize>,
    pub w_size: Option<usize>,
    pub expected_mass: Option<f64>,
    pub min_nu: Option<u64>,
    pub nu_positive_trials: u64,
    pub two_dominating_trials: u64,
    pub size_envelope: f64,
    pub pass: bool,
    pub error: Option<String>,
}
