//! Machine-readable JSON reports. All matrices are serialized row-major with
//! an explicit entry order ("input" throughout: the solver's internal
//! canonical permutation is undone before anything is printed). Floats go
//! through serde_json's shortest-round-trip encoding, so parsing a report
//! back reproduces every value bit-for-bit.

use cmtfa::{
    Certificate, CmtfaSolution, ComparisonReport, DominanceClass, DominanceLabel, OracleSolution,
    OracleStatus, RankClass,
};
use serde::{Deserialize, Serialize};

use crate::input::InputEcho;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DominanceReport {
    pub label: String,
    pub margin: f64,
}

impl From<DominanceClass> for DominanceReport {
    fn from(class: DominanceClass) -> Self {
        DominanceReport {
            label: match class.label {
                DominanceLabel::Dominant => "Dominant".into(),
                DominanceLabel::NonDominant => "NonDominant".into(),
            },
            margin: class.margin,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SolutionReport {
    pub rank_class: String,
    /// Row-major entries; "input" means the caller's coordinate order.
    pub order: String,
    pub sigma_t: Vec<Vec<f64>>,
    pub d: Vec<f64>,
    pub trace_sigma_t: f64,
}

impl From<&CmtfaSolution> for SolutionReport {
    fn from(solution: &CmtfaSolution) -> Self {
        SolutionReport {
            rank_class: match solution.rank_class {
                RankClass::RankOne => "RankOne".into(),
                RankClass::RankNMinusOne => "RankNMinusOne".into(),
            },
            order: "input".into(),
            sigma_t: solution.sigma_t.to_rows(),
            d: solution.d.clone(),
            trace_sigma_t: solution.trace_sigma_t,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CertificateReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case_tag: Option<String>,
    pub columns: usize,
    pub row_norm_residual: f64,
    pub null_residual: f64,
    pub min_eig: f64,
    pub verdict: bool,
    pub tol: f64,
}

impl CertificateReport {
    pub fn new(cert: &Certificate, case_tag: Option<String>, tol: f64) -> Self {
        CertificateReport {
            case_tag,
            columns: cert.t_matrix.n_cols(),
            row_norm_residual: cert.row_norm_residual,
            null_residual: cert.null_residual,
            min_eig: cert.min_eig,
            verdict: cert.verdict,
            tol,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct OracleReport {
    pub status: String,
    pub objective: f64,
    pub iterations: usize,
    pub d: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<AgreementReport>,
}

impl OracleReport {
    pub fn new(oracle: &OracleSolution, comparison: Option<AgreementReport>) -> Self {
        OracleReport {
            status: match oracle.status {
                OracleStatus::Optimal => "Optimal".into(),
                OracleStatus::IterationLimit => "IterationLimit".into(),
                OracleStatus::Infeasible => "Infeasible".into(),
            },
            objective: oracle.objective,
            iterations: oracle.iterations,
            d: oracle.d.clone(),
            comparison,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AgreementReport {
    pub objective_gap: f64,
    pub entrywise_gap: f64,
    pub objective_tol: f64,
    pub entrywise_tol: f64,
    pub agree: bool,
}

impl From<&ComparisonReport> for AgreementReport {
    fn from(report: &ComparisonReport) -> Self {
        AgreementReport {
            objective_gap: report.objective_gap,
            entrywise_gap: report.entrywise_gap,
            objective_tol: report.objective_tol,
            entrywise_tol: report.entrywise_tol,
            agree: report.agree,
        }
    }
}

/// Full report for `solve` and `compare`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunReport {
    pub input: InputEcho,
    pub dominance: DominanceReport,
    pub solution: SolutionReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    pub timings_ms: Timings,
}

/// Per-stage wall-clock timings in milliseconds; the only report fields that
/// are not reproducible.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
pub struct Timings {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solve: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EstimateReport {
    pub input: InputEcho,
    pub alpha: Vec<f64>,
    pub dominance: DominanceReport,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LemmaCounts {
    pub checked: usize,
    pub passed: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LemmasReport {
    pub trials: usize,
    pub n_max: usize,
    pub seed: u64,
    pub lemma4: LemmaCounts,
    pub lemma5: LemmaCounts,
    pub lemma6: LemmaCounts,
    /// Single-element draws are excluded from the lemma 5 and 6 runs, which
    /// need at least two elements.
    pub singletons_excluded: usize,
    pub violations: Vec<LemmaViolation>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LemmaViolation {
    pub lemma: String,
    pub elements: Vec<f64>,
    pub detail: String,
}

pub fn print_json<T: Serialize>(report: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string(report)?);
    Ok(())
}
