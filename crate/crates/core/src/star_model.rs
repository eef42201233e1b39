//! Problem inputs for the star latent model: the loading vector, its
//! dominance classification, the induced covariance, and sampling /
//! estimation helpers.
//!
//! The observable vector is `X = alpha * Y + Z` with `Y ~ N(0,1)` and
//! independent `Z_i ~ N(0, 1 - alpha_i^2)`, so the population covariance has
//! ones on the diagonal and `alpha_i * alpha_j` off it.
//!
//! Solvers in this crate work in a canonical order with `|alpha_1|` largest.
//! [`AlphaVector`] keeps the caller's order and carries the permutation, so
//! every public result can be handed back in input order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{is_psd_within, Matrix};

/// Validated loading vector.
///
/// Invariants enforced at construction: at least two entries, every entry
/// strictly inside `(-1, 0) ∪ (0, 1)`. The canonical permutation sorts by
/// descending magnitude with a stable tie-break on input index; ties are
/// benign because every quantity derived from the order is tie-invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaVector {
    values: Vec<f64>,
    signs: Vec<i8>,
    sort_perm: Vec<usize>,
}

impl AlphaVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooFewLoadings(values.len()));
        }
        for (index, &value) in values.iter().enumerate() {
            let a = value.abs();
            if !(a > 0.0 && a < 1.0) {
                return Err(Error::LoadingOutOfRange { index, value });
            }
        }
        let signs = values
            .iter()
            .map(|&v| if v > 0.0 { 1 } else { -1 })
            .collect();
        let mut sort_perm: Vec<usize> = (0..values.len()).collect();
        // Stable: equal magnitudes keep input order.
        sort_perm.sort_by(|&a, &b| values[b].abs().partial_cmp(&values[a].abs()).unwrap());
        Ok(AlphaVector {
            values,
            signs,
            sort_perm,
        })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Loadings in the caller's order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Signs in the caller's order; `+1` exactly when the loading is positive.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Canonical position `k` maps to input index `sort_perm()[k]`.
    pub fn sort_perm(&self) -> &[usize] {
        &self.sort_perm
    }

    /// Loadings reordered so magnitudes are non-increasing.
    pub fn canonical_values(&self) -> Vec<f64> {
        self.sort_perm.iter().map(|&i| self.values[i]).collect()
    }

    /// Magnitudes in canonical order.
    pub fn canonical_abs(&self) -> Vec<f64> {
        self.sort_perm
            .iter()
            .map(|&i| self.values[i].abs())
            .collect()
    }

    /// Map a canonically ordered vector back to input order.
    pub fn unpermute(&self, canonical: &[f64]) -> Vec<f64> {
        assert_eq!(canonical.len(), self.n());
        let mut out = vec![0.0; self.n()];
        for (k, &i) in self.sort_perm.iter().enumerate() {
            out[i] = canonical[k];
        }
        out
    }
}

/// Dominance verdict for a loading vector.
///
/// `margin` is the sum of the trailing canonical magnitudes minus the leading
/// one; non-dominant means `margin >= 0`, boundary equality included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DominanceClass {
    pub label: DominanceLabel,
    pub margin: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceLabel {
    Dominant,
    NonDominant,
}

impl DominanceClass {
    pub fn is_dominant(&self) -> bool {
        self.label == DominanceLabel::Dominant
    }
}

/// Classify a loading vector as dominant or non-dominant.
///
/// A vector is dominant when its largest magnitude exceeds the sum of all the
/// others; at most one entry can do that, so classifying the canonical leader
/// settles the whole vector.
pub fn classify_dominance(alpha: &AlphaVector) -> DominanceClass {
    let abs = alpha.canonical_abs();
    let tail: f64 = abs[1..].iter().sum();
    let margin = tail - abs[0];
    let label = if margin >= 0.0 {
        DominanceLabel::NonDominant
    } else {
        DominanceLabel::Dominant
    };
    DominanceClass { label, margin }
}

/// Population covariance of the star model: unit diagonal, products off it.
#[derive(Debug, Clone, PartialEq)]
pub struct StarCovariance {
    entries: Matrix,
}

impl StarCovariance {
    /// Wrap an existing matrix, checking the star-covariance invariants:
    /// square, symmetric, unit diagonal, positive semidefinite.
    pub fn try_from_matrix(entries: Matrix) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "covariance must be square, got {}x{}",
                entries.n_rows(),
                entries.n_cols()
            )));
        }
        let asym = entries.asymmetry();
        if asym > 1e-12 {
            return Err(Error::NotSymmetric(asym));
        }
        for i in 0..entries.n_rows() {
            let value = entries[(i, i)];
            if (value - 1.0).abs() > 1e-12 {
                return Err(Error::NotUnitDiagonal { index: i, value });
            }
        }
        let shift = 1e-10 * entries.n_rows() as f64;
        if !is_psd_within(&entries, shift) {
            return Err(Error::NotPsd);
        }
        Ok(StarCovariance { entries })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.n_rows()
    }
}

/// Build the star covariance generated by `alpha`.
pub fn build_sigma_x(alpha: &AlphaVector) -> StarCovariance {
    let n = alpha.n();
    let v = alpha.values();
    let mut entries = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            entries[(i, j)] = if i == j { 1.0 } else { v[i] * v[j] };
        }
    }
    StarCovariance { entries }
}

/// A batch of draws from the latent star model.
#[derive(Debug, Clone)]
pub struct LatentSampleBatch {
    /// `N x n` matrix, one draw per row.
    pub samples: Matrix,
    /// Seed the batch was generated from.
    pub seed: u64,
    /// Per-coordinate noise variances `1 - alpha_i^2`.
    pub noise_variances: Vec<f64>,
}

/// Draw `n_samples` i.i.d. realizations of `X = alpha * Y + Z`.
///
/// Deterministic for a fixed seed; bit-exact reproducibility across platforms
/// is not promised, determinism per seed is.
pub fn sample_latent(
    alpha: &AlphaVector,
    n_samples: usize,
    seed: u64,
) -> Result<LatentSampleBatch> {
    if n_samples == 0 {
        return Err(Error::TooFewSamples { need: 1, got: 0 });
    }
    let n = alpha.n();
    let values = alpha.values();
    let noise_variances: Vec<f64> = values.iter().map(|a| 1.0 - a * a).collect();
    let noise_sd: Vec<f64> = noise_variances.iter().map(|v| v.sqrt()).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Matrix::zeros(n_samples, n);
    for row in 0..n_samples {
        let y: f64 = rng.sample(StandardNormal);
        for i in 0..n {
            let z: f64 = rng.sample::<f64, _>(StandardNormal) * noise_sd[i];
            samples[(row, i)] = values[i] * y + z;
        }
    }
    Ok(LatentSampleBatch {
        samples,
        seed,
        noise_variances,
    })
}

/// Unbiased sample covariance of an `N x n` data matrix (rows are draws).
pub fn sample_covariance(samples: &Matrix) -> Result<Matrix> {
    let n_samples = samples.n_rows();
    if n_samples < 2 {
        return Err(Error::TooFewSamples {
            need: 2,
            got: n_samples,
        });
    }
    let n = samples.n_cols();
    let mut mean = vec![0.0; n];
    for row in 0..n_samples {
        for (m, &x) in mean.iter_mut().zip(samples.row(row)) {
            *m += x;
        }
    }
    for m in &mut mean {
        *m /= n_samples as f64;
    }
    let mut cov = Matrix::zeros(n, n);
    for row in 0..n_samples {
        let r = samples.row(row);
        for i in 0..n {
            let di = r[i] - mean[i];
            for j in i..n {
                cov[(i, j)] += di * (r[j] - mean[j]);
            }
        }
    }
    let scale = 1.0 / (n_samples as f64 - 1.0);
    for i in 0..n {
        for j in i..n {
            cov[(i, j)] *= scale;
            cov[(j, i)] = cov[(i, j)];
        }
    }
    Ok(cov)
}

/// Recover loadings from a covariance with star structure.
///
/// Each `alpha_i^2` is the median over pairs `(j, k)` of
/// `sigma_ij * sigma_ik / sigma_jk`, which is exact on a noiseless star
/// covariance and robust to sampling noise. The overall sign is fixed by
/// making the first loading positive; the rest follow from the first row of
/// the matrix. Only off-diagonal entries are read, so a sample covariance
/// with non-unit diagonal is acceptable.
pub fn estimate_alpha(sigma_hat: &Matrix) -> Result<AlphaVector> {
    if !sigma_hat.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "covariance must be square, got {}x{}",
            sigma_hat.n_rows(),
            sigma_hat.n_cols()
        )));
    }
    let n = sigma_hat.n_rows();
    if n < 3 {
        return Err(Error::TooFewForEstimation(n));
    }
    let asym = sigma_hat.asymmetry();
    if asym > 1e-8 {
        return Err(Error::NotSymmetric(asym));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if sigma_hat[(i, j)] == 0.0 {
                return Err(Error::NonStarInput(format!(
                    "zero off-diagonal entry at ({i}, {j})"
                )));
            }
        }
    }

    let mut values = vec![0.0; n];
    for i in 0..n {
        let mut ratios = Vec::new();
        for j in 0..n {
            if j == i {
                continue;
            }
            for k in (j + 1)..n {
                if k == i {
                    continue;
                }
                ratios.push(sigma_hat[(i, j)] * sigma_hat[(i, k)] / sigma_hat[(j, k)]);
            }
        }
        let alpha_sq = median(&mut ratios);
        if !(alpha_sq > 0.0 && alpha_sq < 1.0) {
            return Err(Error::NonStarInput(format!(
                "estimated alpha_{i}^2 = {alpha_sq} outside (0, 1)"
            )));
        }
        values[i] = alpha_sq.sqrt();
    }
    for j in 1..n {
        if sigma_hat[(0, j)] < 0.0 {
            values[j] = -values[j];
        }
    }
    AlphaVector::new(values)
}

fn median(xs: &mut [f64]) -> f64 {
    debug_assert!(!xs.is_empty());
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        0.5 * (xs[mid - 1] + xs[mid])
    }
}
