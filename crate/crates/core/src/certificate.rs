//! Optimality certificates for both closed-form solutions, and a verifier
//! for arbitrary `(d, T)` pairs.
//!
//! A diagonal `d` is optimal exactly when `sigma_x - diag(d)` is singular
//! PSD and there are null-space vectors whose Hadamard squares sum to the
//! all-ones vector, up to non-negative multipliers on coordinates where
//! `d_i = 0`. For the rank n-1 solution the certificate is the single sign
//! vector `phi`. For the rank-1 solution it is `T = V B`: `V` stacks the
//! elementary null-space basis plus one sign-weighted combination column,
//! and the diagonal scaling `B = sqrt(beta)` solves the unit-row-norm
//! equations. The scaling exists with `beta_nn <= 1` precisely when the
//! loadings are non-dominant, so on a dominant input the construction
//! pipeline fails with a dominance violation rather than a precondition
//! error; that failure is the converse direction of the theorem, observable
//! in code.

use crate::closed_form::{null_vector_phi, solve_dm};
use crate::error::{Error, Result};
use crate::linalg::{outer, Matrix};
use crate::numeric_oracle::eig_sym;
use crate::partition;
use crate::star_model::{classify_dominance, AlphaVector, StarCovariance};

/// Default verdict tolerance; the constructions are exact up to rounding,
/// so residuals sit near machine epsilon and this leaves ample margin.
pub const DEFAULT_CERT_TOL: f64 = 1e-8;

/// Exact-comparison band for the three-way case split on `1 - sum(at_j^2)`.
const CASE_SPLIT_TOL: f64 = 1e-12;

/// Which side of the trichotomy `sum(alpha_tilde^2) vs 1` the input fell on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    SumSquaresEqualsOne,
    SumSquaresBelowOne,
    SumSquaresAboveOne,
}

/// The scaled null basis `T = V B` in canonical order.
#[derive(Debug, Clone)]
pub struct NullBasisConstruction {
    /// First `n-1` columns are the elementary null vectors, the last is
    /// their `c`-weighted combination.
    pub v_matrix: Matrix,
    /// Combination signs `c_2..c_n`, each `+1` or `-1`.
    pub c: Vec<f64>,
    /// Diagonal of `beta = B B'`, all entries in `[0, 1]`.
    pub beta: Vec<f64>,
    /// Normalized loadings `alpha_j / alpha_1` for `j >= 2`, canonical order.
    pub alpha_tilde: Vec<f64>,
    pub case_tag: CaseTag,
}

/// Certificate consisting of null-space columns with unit row norms.
#[derive(Debug, Clone)]
pub struct Certificate {
    /// `n x r` matrix whose columns lie in the null space of the reduced
    /// matrix; rows are in input order.
    pub t_matrix: Matrix,
    /// Non-negative multipliers on coordinates with `d_i = 0`; empty for
    /// every star input.
    pub mu: Vec<(usize, f64)>,
    /// Largest deviation of a row's squared norm from 1, after the `mu`
    /// correction.
    pub row_norm_residual: f64,
    /// Largest entry of `(sigma_x - diag(d)) T`.
    pub null_residual: f64,
    /// Smallest eigenvalue of `sigma_x - diag(d)`.
    pub min_eig: f64,
    pub verdict: bool,
}

fn alpha_tilde_canonical(alpha: &AlphaVector) -> Vec<f64> {
    let canonical = alpha.canonical_values();
    canonical[1..].iter().map(|a| a / canonical[0]).collect()
}

fn case_split(alpha_tilde: &[f64]) -> CaseTag {
    let sum_sq: f64 = alpha_tilde.iter().map(|a| a * a).sum();
    if (1.0 - sum_sq).abs() <= CASE_SPLIT_TOL {
        CaseTag::SumSquaresEqualsOne
    } else if sum_sq < 1.0 {
        CaseTag::SumSquaresBelowOne
    } else {
        CaseTag::SumSquaresAboveOne
    }
}

fn choose_c_impl(alpha: &AlphaVector) -> Result<(Vec<f64>, CaseTag)> {
    let alpha_tilde = alpha_tilde_canonical(alpha);
    let tag = case_split(&alpha_tilde);
    let c = match tag {
        // The combination column gets zero weight, any signs work.
        CaseTag::SumSquaresEqualsOne => vec![1.0; alpha_tilde.len()],
        // Align every term positive: c_j * at_j = |at_j|.
        CaseTag::SumSquaresBelowOne => alpha_tilde
            .iter()
            .map(|a| if *a >= 0.0 { 1.0 } else { -1.0 })
            .collect(),
        // Balance the magnitudes to the partition minimum, then map the
        // partition signs back through the signs of alpha_tilde.
        CaseTag::SumSquaresAboveOne => {
            let magnitudes: Vec<f64> = alpha_tilde.iter().map(|a| a.abs()).collect();
            let optimum = partition::s_min(&magnitudes)?;
            alpha_tilde
                .iter()
                .zip(&optimum.signs)
                .map(|(a, &s)| f64::from(s) * if *a >= 0.0 { 1.0 } else { -1.0 })
                .collect()
        }
    };
    Ok((c, tag))
}

/// Pick the combination signs for the null-basis construction.
///
/// Rejects dominant input up front; the unchecked pipeline used by
/// [`build_t_nd`] lets [`solve_beta`] report the same fact as a dominance
/// violation instead.
pub fn choose_c(alpha: &AlphaVector) -> Result<(Vec<f64>, CaseTag)> {
    let class = classify_dominance(alpha);
    if class.is_dominant() {
        return Err(Error::NotNonDominant {
            margin: class.margin,
        });
    }
    choose_c_impl(alpha)
}

/// Solve the unit-row-norm equations for the diagonal of `beta = B B'`.
///
/// In the equal-sum-of-squares case the combination column is switched off.
/// Otherwise `beta_nn = (1 - sum at^2) / ((sum c at)^2 - sum at^2)` and the
/// remaining entries are `1 - c^2 beta_nn`. A quotient above 1 cannot be
/// scaled into a valid certificate and proves the loadings are dominant.
pub fn solve_beta(alpha: &AlphaVector, c: &[f64], case_tag: CaseTag) -> Result<Vec<f64>> {
    let n = alpha.n();
    if c.len() != n - 1 {
        return Err(Error::DimensionMismatch(format!(
            "expected {} combination signs, got {}",
            n - 1,
            c.len()
        )));
    }
    let alpha_tilde = alpha_tilde_canonical(alpha);
    let mut beta = vec![1.0; n];
    match case_tag {
        CaseTag::SumSquaresEqualsOne => {
            beta[n - 1] = 0.0;
        }
        CaseTag::SumSquaresBelowOne | CaseTag::SumSquaresAboveOne => {
            let sum_sq: f64 = alpha_tilde.iter().map(|a| a * a).sum();
            let weighted: f64 = alpha_tilde.iter().zip(c).map(|(a, s)| a * s).sum();
            let beta_nn = (1.0 - sum_sq) / (weighted * weighted - sum_sq);
            // Catches NaN and infinities as well as out-of-range quotients.
            if !(-1e-12..=1.0 + 1e-12).contains(&beta_nn) {
                return Err(Error::DominanceViolation { beta_nn });
            }
            let beta_nn = beta_nn.clamp(0.0, 1.0);
            for (i, s) in c.iter().enumerate() {
                beta[i] = 1.0 - s * s * beta_nn;
            }
            beta[n - 1] = beta_nn;
        }
    }
    Ok(beta)
}

/// Run the full null-basis construction in canonical order.
///
/// Dominant input surfaces as [`Error::DominanceViolation`] from the
/// `beta` solve; every other valid input yields columns that annihilate the
/// loading vector and a scaling with unit row norms.
pub fn build_null_basis(alpha: &AlphaVector) -> Result<NullBasisConstruction> {
    let (c, case_tag) = choose_c_impl(alpha)?;
    let beta = solve_beta(alpha, &c, case_tag)?;
    let alpha_tilde = alpha_tilde_canonical(alpha);
    let n = alpha.n();
    let mut v_matrix = Matrix::zeros(n, n);
    for j in 0..n - 1 {
        v_matrix[(0, j)] = -alpha_tilde[j];
        v_matrix[(j + 1, j)] = 1.0;
    }
    let weighted: f64 = alpha_tilde.iter().zip(&c).map(|(a, s)| a * s).sum();
    v_matrix[(0, n - 1)] = -weighted;
    for (i, s) in c.iter().enumerate() {
        v_matrix[(i + 1, n - 1)] = *s;
    }
    Ok(NullBasisConstruction {
        v_matrix,
        c,
        beta,
        alpha_tilde,
        case_tag,
    })
}

/// Certificate for the rank-1 solution: `T = V sqrt(beta)`, rows mapped back
/// to input order. Fails with a dominance violation on dominant input.
pub fn build_t_nd(alpha: &AlphaVector) -> Result<Certificate> {
    let basis = build_null_basis(alpha)?;
    let n = alpha.n();
    let mut t_canonical = basis.v_matrix;
    for j in 0..n {
        let scale = basis.beta[j].sqrt();
        for i in 0..n {
            t_canonical[(i, j)] *= scale;
        }
    }
    let perm = alpha.sort_perm();
    let mut t_matrix = Matrix::zeros(n, n);
    for k in 0..n {
        for j in 0..n {
            t_matrix[(perm[k], j)] = t_canonical[(k, j)];
        }
    }

    let v = alpha.values();
    let reduced = outer(v, v);
    let d: Vec<f64> = v.iter().map(|a| 1.0 - a * a).collect();
    score_certificate(&reduced, &d, t_matrix, DEFAULT_CERT_TOL)
}

/// Certificate for the rank n-1 solution: the single sign column `phi`,
/// whose Hadamard square is exactly the all-ones vector.
pub fn build_t_dm(alpha: &AlphaVector) -> Result<Certificate> {
    let phi = null_vector_phi(alpha)?;
    let n = alpha.n();
    let mut t_matrix = Matrix::zeros(n, 1);
    for (i, &s) in phi.entries.iter().enumerate() {
        t_matrix[(i, 0)] = f64::from(s);
    }
    let solution = solve_dm(alpha)?;
    score_certificate(&solution.sigma_t, &solution.d, t_matrix, DEFAULT_CERT_TOL)
}

/// Check a `(d, T)` pair against the optimality condition at tolerance `tol`.
///
/// The reduced matrix is recomputed as `sigma_x - diag(d)` from the passed
/// diagonal, so perturbed or foreign solutions are audited honestly. On
/// coordinates where `d_i = 0` (within `tol`) a free non-negative multiplier
/// is fitted before the row-norm test; star inputs never have any, but the
/// general form lets the verifier audit near-degenerate oracle solutions.
pub fn verify_certificate(
    sigma_x: &StarCovariance,
    solution: &crate::closed_form::CmtfaSolution,
    cert: &Certificate,
    tol: f64,
) -> Result<Certificate> {
    let n = sigma_x.n();
    if solution.d.len() != n || cert.t_matrix.n_rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "sigma is {n}x{n}, d has {} entries, T has {} rows",
            solution.d.len(),
            cert.t_matrix.n_rows()
        )));
    }
    let mut reduced = sigma_x.matrix().clone();
    for i in 0..n {
        reduced[(i, i)] -= solution.d[i];
    }
    score_certificate(&reduced, &solution.d, cert.t_matrix.clone(), tol)
}

/// Shared scoring: residuals, multiplier fit, and the verdict.
fn score_certificate(
    reduced: &Matrix,
    d: &[f64],
    t_matrix: Matrix,
    tol: f64,
) -> Result<Certificate> {
    let n = reduced.n_rows();
    let r = t_matrix.n_cols();

    // Row norms of T with the multiplier correction. Each multiplier only
    // touches its own coordinate, so the non-negative least-squares fit is a
    // clamp of the per-row excess.
    let mut mu = Vec::new();
    let mut row_norm_residual = 0.0f64;
    for i in 0..n {
        let rowsq: f64 = (0..r).map(|j| t_matrix[(i, j)] * t_matrix[(i, j)]).sum();
        let mut deviation = rowsq - 1.0;
        if d[i].abs() <= tol {
            let multiplier = deviation.max(0.0);
            if multiplier > 0.0 {
                mu.push((i, multiplier));
            }
            deviation -= multiplier;
        }
        row_norm_residual = row_norm_residual.max(deviation.abs());
    }

    let null_residual = reduced.matmul(&t_matrix).max_abs();
    let min_eig = eig_sym(reduced)?.eigenvalues[0];
    let d_ok = d.iter().all(|&x| x >= -tol);
    let verdict = row_norm_residual <= tol && null_residual <= tol && min_eig >= -tol && d_ok;
    Ok(Certificate {
        t_matrix,
        mu,
        row_norm_residual,
        null_residual,
        min_eig,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::{solve, solve_nd, CmtfaSolution, RankClass};
    use crate::star_model::build_sigma_x;
    use approx::assert_abs_diff_eq;

    fn alpha(values: &[f64]) -> AlphaVector {
        AlphaVector::new(values.to_vec()).unwrap()
    }

    #[test]
    fn case_split_matches_the_worked_ratios() {
        let (c, tag) = choose_c(&alpha(&[0.5, 0.4, 0.3])).unwrap();
        assert_eq!(tag, CaseTag::SumSquaresEqualsOne);
        assert_eq!(c, vec![1.0, 1.0]);

        let (c, tag) = choose_c(&alpha(&[0.8, 0.56, 0.40])).unwrap();
        assert_eq!(tag, CaseTag::SumSquaresBelowOne);
        assert_eq!(c, vec![1.0, 1.0]);

        let (c, tag) = choose_c(&alpha(&[0.4, 0.35, 0.3, 0.25])).unwrap();
        assert_eq!(tag, CaseTag::SumSquaresAboveOne);
        assert_eq!(c, vec![-1.0, 1.0, 1.0]);
    }

    #[test]
    fn choose_c_follows_loading_signs() {
        // Negative leader flips every normalized loading.
        let (c, tag) = choose_c(&alpha(&[0.8, -0.56, 0.40])).unwrap();
        assert_eq!(tag, CaseTag::SumSquaresBelowOne);
        assert_eq!(c, vec![-1.0, 1.0]);

        let (_, tag) = choose_c(&alpha(&[-0.5, 0.4, 0.3])).unwrap();
        assert_eq!(tag, CaseTag::SumSquaresEqualsOne);
    }

    #[test]
    fn choose_c_rejects_dominant_input() {
        assert!(matches!(
            choose_c(&alpha(&[0.9, 0.3, 0.2])),
            Err(Error::NotNonDominant { .. })
        ));
    }

    #[test]
    fn beta_solves_match_hand_arithmetic() {
        let a = alpha(&[0.5, 0.4, 0.3]);
        let (c, tag) = choose_c(&a).unwrap();
        assert_eq!(solve_beta(&a, &c, tag).unwrap(), vec![1.0, 1.0, 0.0]);

        let a = alpha(&[0.8, 0.56, 0.40]);
        let (c, tag) = choose_c(&a).unwrap();
        let beta = solve_beta(&a, &c, tag).unwrap();
        assert_abs_diff_eq!(beta[2], 0.26 / 0.70, epsilon = 1e-12);
        assert_abs_diff_eq!(beta[0], 1.0 - 0.26 / 0.70, epsilon = 1e-12);
        assert_abs_diff_eq!(beta[1], 1.0 - 0.26 / 0.70, epsilon = 1e-12);

        let a = alpha(&[0.4, 0.35, 0.3, 0.25]);
        let (c, tag) = choose_c(&a).unwrap();
        let beta = solve_beta(&a, &c, tag).unwrap();
        assert_abs_diff_eq!(beta[3], 0.71875 / 1.46875, epsilon = 1e-12);
        for b in &beta[..3] {
            assert_abs_diff_eq!(b, &(1.0 - 0.71875 / 1.46875), epsilon = 1e-12);
        }
    }

    #[test]
    fn boundary_beta_degenerates_to_one() {
        let a = alpha(&[0.6, 0.4, 0.2]);
        let (c, tag) = choose_c(&a).unwrap();
        let beta = solve_beta(&a, &c, tag).unwrap();
        assert_abs_diff_eq!(beta[2], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(beta[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(beta[1], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn dominant_input_fails_with_dominance_violation() {
        for values in [&[0.9, 0.3, 0.2][..], &[0.7, 0.4]] {
            let a = alpha(values);
            match build_t_nd(&a) {
                Err(Error::DominanceViolation { beta_nn }) => {
                    assert!(beta_nn > 1.0 || !beta_nn.is_finite());
                }
                other => panic!("expected dominance violation, got {other:?}"),
            }
        }
    }

    #[test]
    fn null_basis_columns_annihilate_alpha() {
        for values in [
            vec![0.5, 0.5, 0.5],
            vec![0.8, 0.56, 0.40],
            vec![0.4, 0.35, 0.3, 0.25],
            vec![-0.5, 0.4, 0.3],
        ] {
            let a = alpha(&values);
            let basis = build_null_basis(&a).unwrap();
            let canonical = a.canonical_values();
            for j in 0..a.n() - 1 {
                let col = basis.v_matrix.col(j);
                let dot: f64 = canonical.iter().zip(&col).map(|(x, y)| x * y).sum();
                assert!(dot.abs() <= 1e-14, "column {j} residual {dot}");
            }
            for b in &basis.beta {
                assert!(*b >= 0.0 && *b <= 1.0);
            }
        }
    }

    #[test]
    fn build_t_nd_equal_loadings_pipeline() {
        // Normalized loadings (1, 1): partition minimum 0, beta all one half.
        let a = alpha(&[0.5, 0.5, 0.5]);
        let basis = build_null_basis(&a).unwrap();
        assert_eq!(basis.case_tag, CaseTag::SumSquaresAboveOne);
        for b in &basis.beta {
            assert_abs_diff_eq!(b, &0.5, epsilon = 1e-12);
        }
        let cert = build_t_nd(&a).unwrap();
        assert!(cert.verdict);
        assert!(cert.row_norm_residual <= 1e-10);
        assert!(cert.null_residual <= 1e-10);
        assert!(cert.mu.is_empty());
    }

    #[test]
    fn build_t_nd_unit_rows_and_null_columns() {
        for values in [
            vec![0.8, 0.56, 0.40],
            vec![0.6, 0.4, 0.2],
            vec![0.3, -0.5, 0.4],
        ] {
            let a = alpha(&values);
            let cert = build_t_nd(&a).unwrap();
            assert!(cert.verdict, "verdict false for {values:?}: {cert:?}");
            assert!(cert.row_norm_residual <= 1e-10);
            assert!(cert.null_residual <= 1e-10);
        }
    }

    #[test]
    fn build_t_dm_is_the_sign_column() {
        let cert = build_t_dm(&alpha(&[0.9, 0.3, 0.2])).unwrap();
        assert_eq!(cert.t_matrix.n_cols(), 1);
        assert_eq!(cert.t_matrix.col(0), vec![1.0, -1.0, -1.0]);
        assert_eq!(cert.row_norm_residual, 0.0);
        assert!(cert.null_residual <= 1e-12);
        assert!(cert.verdict);

        let cert = build_t_dm(&alpha(&[0.9, 0.3, -0.2])).unwrap();
        assert_eq!(cert.t_matrix.col(0), vec![1.0, -1.0, 1.0]);

        let cert = build_t_dm(&alpha(&[0.7, 0.4])).unwrap();
        assert_eq!(cert.t_matrix.col(0), vec![1.0, -1.0]);
        let cert = build_t_dm(&alpha(&[0.7, -0.4])).unwrap();
        assert_eq!(cert.t_matrix.col(0), vec![1.0, 1.0]);

        assert!(matches!(
            build_t_dm(&alpha(&[0.5, 0.5, 0.5])),
            Err(Error::NotDominant { .. })
        ));
    }

    #[test]
    fn verify_accepts_the_matching_construction() {
        let a = alpha(&[0.9, 0.3, 0.2]);
        let sigma = build_sigma_x(&a);
        let solution = solve(&a);
        let cert = build_t_dm(&a).unwrap();
        let verified = verify_certificate(&sigma, &solution, &cert, 1e-8).unwrap();
        assert!(verified.verdict);
        assert!(verified.row_norm_residual <= 1e-12);
        assert!(verified.null_residual <= 1e-12);
        assert!(verified.min_eig >= -1e-12);
    }

    #[test]
    fn verify_rejects_the_wrong_branch() {
        // Rank-1 split of a dominant vector: no unit-row-norm T exists in the
        // null space. Use the unscaled basis columns as the candidate T.
        let a = alpha(&[0.9, 0.3, 0.2]);
        let sigma = build_sigma_x(&a);
        let v = a.values();
        let wrong = CmtfaSolution {
            sigma_t: outer(v, v),
            d: v.iter().map(|x| 1.0 - x * x).collect(),
            rank_class: RankClass::RankOne,
            trace_sigma_t: 0.94,
        };
        let basis = build_null_basis(&alpha(&[0.9, 0.3, 0.2]));
        // Dominant input cannot even produce the basis; fall back to the
        // elementary null vectors with unit scaling.
        assert!(basis.is_err());
        let mut t = Matrix::zeros(3, 3);
        let at = [0.3 / 0.9, 0.2 / 0.9];
        for j in 0..2 {
            t[(0, j)] = -at[j];
            t[(j + 1, j)] = 1.0;
        }
        t[(0, 2)] = -(at[0] + at[1]);
        t[(1, 2)] = 1.0;
        t[(2, 2)] = 1.0;
        let cert = Certificate {
            t_matrix: t,
            mu: vec![],
            row_norm_residual: f64::NAN,
            null_residual: f64::NAN,
            min_eig: f64::NAN,
            verdict: false,
        };
        let verified = verify_certificate(&sigma, &wrong, &cert, 1e-8).unwrap();
        assert!(!verified.verdict);
        assert!(verified.row_norm_residual > 0.01);
    }

    #[test]
    fn verify_catches_diagonal_perturbations() {
        let a = alpha(&[0.5, 0.5, 0.5]);
        let sigma = build_sigma_x(&a);
        let mut solution = solve(&a);
        let cert = build_t_nd(&a).unwrap();
        solution.d[0] += 1e-3;
        let verified = verify_certificate(&sigma, &solution, &cert, 1e-8).unwrap();
        assert!(!verified.verdict);
        assert!(verified.min_eig < -1e-8);
    }

    #[test]
    fn multiplier_fit_absorbs_heavy_rows_on_zero_diagonals() {
        // Hand-built degenerate audit: d_1 = 0 frees a multiplier that
        // absorbs the oversized first row of T.
        let a = alpha(&[0.5, 0.5, 0.5]);
        let sigma = build_sigma_x(&a);
        let solution = CmtfaSolution {
            sigma_t: sigma.matrix().clone(),
            d: vec![0.0, 0.75, 0.75],
            rank_class: RankClass::RankOne,
            trace_sigma_t: 3.0,
        };
        let mut t = Matrix::zeros(3, 1);
        t[(0, 0)] = 2.0f64.sqrt();
        t[(1, 0)] = 1.0;
        t[(2, 0)] = -1.0;
        let cert = Certificate {
            t_matrix: t,
            mu: vec![],
            row_norm_residual: f64::NAN,
            null_residual: f64::NAN,
            min_eig: f64::NAN,
            verdict: false,
        };
        let verified = verify_certificate(&sigma, &solution, &cert, 1e-8).unwrap();
        assert_eq!(verified.mu.len(), 1);
        assert_eq!(verified.mu[0].0, 0);
        assert_abs_diff_eq!(verified.mu[0].1, 1.0, epsilon = 1e-12);
        assert!(verified.row_norm_residual <= 1e-12);
        // The pair is still not optimal; the null residual exposes it.
        assert!(!verified.verdict);
    }

    #[test]
    fn verify_rejects_dimension_mismatch() {
        let a = alpha(&[0.5, 0.5, 0.5]);
        let sigma = build_sigma_x(&a);
        let solution = solve(&alpha(&[0.5, 0.5]));
        let cert = build_t_nd(&a).unwrap();
        assert!(matches!(
            verify_certificate(&sigma, &solution, &cert, 1e-8),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn boundary_certificate_collapses_but_verifies() {
        let a = alpha(&[0.6, 0.4, 0.2]);
        let basis = build_null_basis(&a).unwrap();
        assert_abs_diff_eq!(basis.beta[2], 1.0, epsilon = 1e-12);
        let cert = build_t_nd(&a).unwrap();
        let verified =
            verify_certificate(&build_sigma_x(&a), &solve_nd(&a).unwrap(), &cert, 1e-8).unwrap();
        assert!(verified.verdict);
    }
}
