//! Problem ingestion: inline loading vectors, JSON covariance files, and CSV
//! sample matrices, each resolved to a validated [`AlphaVector`].

use std::path::Path;

use anyhow::{bail, Context, Result};
use cmtfa::{estimate_alpha, sample_covariance, AlphaVector, Matrix};
use serde::{Deserialize, Serialize};

/// Echo of what the caller fed in, embedded in every report. Reports are
/// self-contained: re-running from the echoed loadings (estimated ones for
/// matrix and sample inputs) reproduces every non-timing field.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct InputEcho {
    pub source: String,
    /// Loadings the run operated on, in input order.
    pub alpha: Vec<f64>,
    /// Present when the loadings were estimated rather than given.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub estimated_from: Option<String>,
}

#[derive(Debug, Deserialize)]
struct SigmaFile {
    sigma: Vec<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum AlphaJson {
    Bare(Vec<f64>),
    Wrapped { alpha: Vec<f64> },
}

/// Parse inline loadings: a bare JSON array or `{"alpha": [...]}`.
pub fn alpha_from_json(text: &str) -> Result<AlphaVector> {
    let parsed: AlphaJson = serde_json::from_str(text)
        .context("--alpha expects a JSON array of numbers or {\"alpha\": [...]}")?;
    let values = match parsed {
        AlphaJson::Bare(values) | AlphaJson::Wrapped { alpha: values } => values,
    };
    AlphaVector::new(values).context("invalid loading vector")
}

/// Load a covariance from a `{"sigma": [[...], ...]}` JSON file.
pub fn sigma_from_file(path: &Path) -> Result<Matrix> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let parsed: SigmaFile =
        serde_json::from_str(&text).context("sigma file must be {\"sigma\": [[...], ...]}")?;
    let matrix = Matrix::from_rows(&parsed.sigma).context("malformed sigma matrix")?;
    if !matrix.is_square() {
        bail!(
            "sigma must be square, got {}x{}",
            matrix.n_rows(),
            matrix.n_cols()
        );
    }
    let asym = matrix.asymmetry();
    if asym > 1e-8 {
        bail!("sigma must be symmetric, max asymmetry {asym}");
    }
    Ok(matrix)
}

/// Load a sample matrix from a headered CSV file, one draw per row.
pub fn data_from_file(path: &Path) -> Result<Matrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.context("malformed CSV record")?;
        let row: Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        rows.push(row.context("non-numeric CSV field")?);
    }
    if rows.is_empty() {
        bail!("CSV file has no data rows");
    }
    Matrix::from_rows(&rows).context("ragged CSV rows")
}

/// Resolve any of the three input forms to loadings plus an echo block.
pub fn resolve(
    alpha: Option<&str>,
    sigma: Option<&Path>,
    data: Option<&Path>,
) -> Result<(AlphaVector, InputEcho)> {
    match (alpha, sigma, data) {
        (Some(text), None, None) => {
            let alpha = alpha_from_json(text)?;
            let echo = InputEcho {
                source: "alpha".into(),
                alpha: alpha.values().to_vec(),
                estimated_from: None,
            };
            Ok((alpha, echo))
        }
        (None, Some(path), None) => {
            let matrix = sigma_from_file(path)?;
            let alpha = estimate_alpha(&matrix).context("loading estimation failed")?;
            let echo = InputEcho {
                source: "sigma".into(),
                alpha: alpha.values().to_vec(),
                estimated_from: Some(path.display().to_string()),
            };
            Ok((alpha, echo))
        }
        (None, None, Some(path)) => {
            let samples = data_from_file(path)?;
            let cov = sample_covariance(&samples).context("sample covariance failed")?;
            let alpha = estimate_alpha(&cov).context("loading estimation failed")?;
            let echo = InputEcho {
                source: "data".into(),
                alpha: alpha.values().to_vec(),
                estimated_from: Some(path.display().to_string()),
            };
            Ok((alpha, echo))
        }
        _ => bail!("exactly one of --alpha, --sigma, --data is required"),
    }
}
