//! Closed-form solutions of constrained minimum trace factor analysis for a
//! star covariance: the rank-1 outer-product form for non-dominant loadings
//! and the rank n-1 form for dominant ones, together with the structural
//! identities both satisfy.
//!
//! The optimization convention is: maximize the diagonal mass `sum(d_i)`
//! (equivalently minimize the trace of the reduced matrix `sigma_x - D`)
//! subject to `sigma_x - D` positive semidefinite and `d >= 0`.

use crate::error::{Error, Result};
use crate::linalg::{outer, Matrix};
use crate::star_model::{classify_dominance, AlphaVector};

/// Inputs whose dominance margin is within this band of zero are treated as
/// boundary cases; both closed forms coincide there.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// Rank classification of a solution's low-rank part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankClass {
    RankOne,
    RankNMinusOne,
}

/// A covariance split `sigma_x = sigma_t + diag(d)`.
///
/// All entries are in the caller's input order. `sigma_t` is symmetric
/// positive semidefinite with the stated rank class and `d` is entrywise
/// non-negative.
#[derive(Debug, Clone, PartialEq)]
pub struct CmtfaSolution {
    /// Low-rank part `sigma_x - D`.
    pub sigma_t: Matrix,
    /// Diagonal of `D`.
    pub d: Vec<f64>,
    pub rank_class: RankClass,
    pub trace_sigma_t: f64,
}

/// Sign vector spanning the one-dimensional null space of the rank n-1
/// solution. Entries are in input order; in canonical order the leading entry
/// is `+1` and entry `i` is `-1` exactly when `alpha_1 * alpha_i > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignVectorPhi {
    pub entries: Vec<i8>,
}

impl SignVectorPhi {
    pub fn as_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&s| f64::from(s)).collect()
    }
}

/// Rank-1 solution for a non-dominant vector: the low-rank part is the
/// loading outer product and the diagonal carries the noise variances.
pub fn solve_nd(alpha: &AlphaVector) -> Result<CmtfaSolution> {
    let class = classify_dominance(alpha);
    if class.is_dominant() {
        return Err(Error::NotNonDominant {
            margin: class.margin,
        });
    }
    let v = alpha.values();
    let sigma_t = outer(v, v);
    let d = v.iter().map(|a| 1.0 - a * a).collect();
    let trace_sigma_t = sigma_t.trace();
    Ok(CmtfaSolution {
        sigma_t,
        d,
        rank_class: RankClass::RankOne,
        trace_sigma_t,
    })
}

/// Rank n-1 solution for a dominant vector.
///
/// Off-diagonal entries stay `alpha_i * alpha_j`; the diagonal is, in
/// canonical order, `|a_1| * sum_{i>=2} |a_i|` for the leader and
/// `|a_i| * (|a_1| - sum_{j != i, j >= 2} |a_j|)` for the rest, then mapped
/// back to input order. Boundary-equality inputs are accepted; there the
/// result coincides with the rank-1 form.
pub fn solve_dm(alpha: &AlphaVector) -> Result<CmtfaSolution> {
    let class = classify_dominance(alpha);
    if class.margin > BOUNDARY_TOL {
        return Err(Error::NotDominant {
            margin: class.margin,
        });
    }
    let n = alpha.n();
    let abs = alpha.canonical_abs();
    let tail: f64 = abs[1..].iter().sum();
    let mut diag_canonical = vec![0.0; n];
    diag_canonical[0] = abs[0] * tail;
    for k in 1..n {
        diag_canonical[k] = abs[k] * (abs[0] - (tail - abs[k]));
    }
    let diag = alpha.unpermute(&diag_canonical);

    let v = alpha.values();
    let mut sigma_t = outer(v, v);
    let mut d = vec![0.0; n];
    for (i, &diag_i) in diag.iter().enumerate() {
        sigma_t[(i, i)] = diag_i;
        let noise = 1.0 - diag_i;
        if noise < -1e-12 {
            return Err(Error::NegativeDiagonal {
                index: i,
                value: noise,
            });
        }
        d[i] = noise.max(0.0);
    }
    let trace_sigma_t = sigma_t.trace();
    Ok(CmtfaSolution {
        sigma_t,
        d,
        rank_class: RankClass::RankNMinusOne,
        trace_sigma_t,
    })
}

/// Dispatch on dominance: non-dominant vectors (boundary included) get the
/// rank-1 solution, dominant ones the rank n-1 solution.
pub fn solve(alpha: &AlphaVector) -> CmtfaSolution {
    if classify_dominance(alpha).is_dominant() {
        solve_dm(alpha).expect("dominant dispatch cannot fail on a valid alpha")
    } else {
        solve_nd(alpha).expect("non-dominant dispatch cannot fail on a valid alpha")
    }
}

/// The one-dimensional null space of the rank n-1 solution, spanned by a
/// `+/-1` vector: canonical entry `i >= 2` is `-1` exactly when
/// `alpha_1 * alpha_i > 0`.
pub fn null_vector_phi(alpha: &AlphaVector) -> Result<SignVectorPhi> {
    let class = classify_dominance(alpha);
    if !class.is_dominant() {
        return Err(Error::NotDominant {
            margin: class.margin,
        });
    }
    let canonical = alpha.canonical_values();
    let mut phi = vec![0.0; alpha.n()];
    phi[0] = 1.0;
    for k in 1..alpha.n() {
        phi[k] = if canonical[0] * canonical[k] > 0.0 {
            -1.0
        } else {
            1.0
        };
    }
    let entries = alpha
        .unpermute(&phi)
        .into_iter()
        .map(|x| if x > 0.0 { 1 } else { -1 })
        .collect();
    Ok(SignVectorPhi { entries })
}

/// Residual of the column identity that forces the rank n-1 solution down a
/// rank: in canonical order, column 1 equals the sign-weighted sum of the
/// remaining columns. Returns the largest absolute deviation.
pub fn dm_column_identity_residual(solution: &CmtfaSolution, alpha: &AlphaVector) -> Result<f64> {
    if solution.rank_class != RankClass::RankNMinusOne {
        return Err(Error::WrongRankClass(
            "column identity applies to rank n-1 solutions only".into(),
        ));
    }
    let n = alpha.n();
    if solution.sigma_t.n_rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "solution is {}x{} but alpha has {} entries",
            solution.sigma_t.n_rows(),
            solution.sigma_t.n_cols(),
            n
        )));
    }
    let perm = alpha.sort_perm();
    let canonical = alpha.canonical_values();
    let sign = |k: usize| if canonical[k] > 0.0 { 1.0 } else { -1.0 };
    let mut worst = 0.0f64;
    for row in 0..n {
        let lead = solution.sigma_t[(perm[row], perm[0])];
        let mut weighted = 0.0;
        for g in 1..n {
            weighted += sign(0) * sign(g) * solution.sigma_t[(perm[row], perm[g])];
        }
        worst = worst.max((lead - weighted).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star_model::build_sigma_x;
    use approx::assert_abs_diff_eq;

    fn alpha(values: &[f64]) -> AlphaVector {
        AlphaVector::new(values.to_vec()).unwrap()
    }

    fn assert_vec_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert_abs_diff_eq!(g, w, epsilon = tol);
        }
    }

    #[test]
    fn solve_nd_is_the_outer_product_split() {
        let s = solve_nd(&alpha(&[0.5, 0.5, 0.5])).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_abs_diff_eq!(s.sigma_t[(i, j)], 0.25, epsilon = 1e-15);
            }
        }
        assert_vec_close(&s.d, &[0.75, 0.75, 0.75], 1e-15);
        assert_eq!(s.rank_class, RankClass::RankOne);

        let s = solve_nd(&alpha(&[0.6, 0.4, 0.2])).unwrap();
        assert_vec_close(
            &[s.sigma_t[(0, 0)], s.sigma_t[(1, 1)], s.sigma_t[(2, 2)]],
            &[0.36, 0.16, 0.04],
            1e-15,
        );
        assert_vec_close(
            &[s.sigma_t[(0, 1)], s.sigma_t[(0, 2)], s.sigma_t[(1, 2)]],
            &[0.24, 0.12, 0.08],
            1e-15,
        );
        assert_vec_close(&s.d, &[0.64, 0.84, 0.96], 1e-15);
    }

    #[test]
    fn solve_nd_trace_is_the_squared_norm() {
        for values in [vec![0.5, 0.5, 0.5], vec![0.3, -0.6, 0.4, 0.2]] {
            let a = alpha(&values);
            let s = solve_nd(&a).unwrap();
            let expect: f64 = values.iter().map(|x| x * x).sum();
            assert_abs_diff_eq!(s.trace_sigma_t, expect, epsilon = 1e-14);
        }
    }

    #[test]
    fn solve_nd_rejects_dominant_input() {
        assert!(matches!(
            solve_nd(&alpha(&[0.9, 0.3, 0.2])),
            Err(Error::NotNonDominant { .. })
        ));
    }

    #[test]
    fn solve_dm_matches_the_worked_instance() {
        let s = solve_dm(&alpha(&[0.9, 0.3, 0.2])).unwrap();
        assert_vec_close(
            &[s.sigma_t[(0, 0)], s.sigma_t[(1, 1)], s.sigma_t[(2, 2)]],
            &[0.45, 0.21, 0.12],
            1e-15,
        );
        assert_vec_close(
            &[s.sigma_t[(0, 1)], s.sigma_t[(0, 2)], s.sigma_t[(1, 2)]],
            &[0.27, 0.18, 0.06],
            1e-15,
        );
        assert_vec_close(&s.d, &[0.55, 0.79, 0.88], 1e-15);
        assert_eq!(s.rank_class, RankClass::RankNMinusOne);
        assert_abs_diff_eq!(s.trace_sigma_t, 0.78, epsilon = 1e-15);
    }

    #[test]
    fn solve_dm_signs_only_touch_off_diagonals() {
        let s = solve_dm(&alpha(&[0.9, 0.3, -0.2])).unwrap();
        assert_vec_close(
            &[s.sigma_t[(0, 0)], s.sigma_t[(1, 1)], s.sigma_t[(2, 2)]],
            &[0.45, 0.21, 0.12],
            1e-15,
        );
        assert_vec_close(
            &[s.sigma_t[(0, 1)], s.sigma_t[(0, 2)], s.sigma_t[(1, 2)]],
            &[0.27, -0.18, -0.06],
            1e-15,
        );
    }

    #[test]
    fn solve_dm_unpermutes_to_input_order() {
        let s = solve_dm(&alpha(&[0.3, 0.9, 0.2])).unwrap();
        assert_vec_close(
            &[s.sigma_t[(0, 0)], s.sigma_t[(1, 1)], s.sigma_t[(2, 2)]],
            &[0.21, 0.45, 0.12],
            1e-15,
        );
        assert_vec_close(&s.d, &[0.79, 0.55, 0.88], 1e-15);
    }

    #[test]
    fn boundary_input_gives_identical_solutions() {
        let a = alpha(&[0.6, 0.4, 0.2]);
        let nd = solve_nd(&a).unwrap();
        let dm = solve_dm(&a).unwrap();
        assert!(nd.sigma_t.max_abs_diff(&dm.sigma_t) <= 1e-12);
        for (x, y) in nd.d.iter().zip(&dm.d) {
            assert_abs_diff_eq!(x, y, epsilon = 1e-12);
        }
    }

    #[test]
    fn solve_dm_rejects_clearly_non_dominant_input() {
        assert!(matches!(
            solve_dm(&alpha(&[0.5, 0.5, 0.5])),
            Err(Error::NotDominant { .. })
        ));
    }

    #[test]
    fn dispatch_picks_the_right_branch() {
        assert_eq!(
            solve(&alpha(&[0.5, 0.5, 0.5])).rank_class,
            RankClass::RankOne
        );
        let s = solve(&alpha(&[0.9, 0.3, 0.2]));
        assert_eq!(s.rank_class, RankClass::RankNMinusOne);
        assert_abs_diff_eq!(s.trace_sigma_t, 0.78, epsilon = 1e-15);
        // Boundary margin routes to the rank-1 label.
        assert_eq!(
            solve(&alpha(&[0.6, 0.4, 0.2])).rank_class,
            RankClass::RankOne
        );
    }

    #[test]
    fn dominant_solution_has_strictly_smaller_trace() {
        let a = alpha(&[0.9, 0.3, 0.2]);
        let dm = solve_dm(&a).unwrap();
        let rank1_trace: f64 = a.values().iter().map(|x| x * x).sum();
        assert_abs_diff_eq!(rank1_trace, 0.94, epsilon = 1e-15);
        assert!(dm.trace_sigma_t < rank1_trace);
    }

    #[test]
    fn reconstruction_matches_sigma_x() {
        for values in [
            vec![0.9, 0.3, 0.2],
            vec![0.5, 0.5, 0.5],
            vec![0.6, 0.4, 0.2],
        ] {
            let a = alpha(&values);
            let s = solve(&a);
            let sigma = build_sigma_x(&a);
            let mut rebuilt = s.sigma_t.clone();
            for i in 0..a.n() {
                rebuilt[(i, i)] += s.d[i];
            }
            assert!(rebuilt.max_abs_diff(sigma.matrix()) <= 1e-12);
        }
    }

    #[test]
    fn phi_sign_rules() {
        assert_eq!(
            null_vector_phi(&alpha(&[0.9, 0.3, 0.2])).unwrap().entries,
            vec![1, -1, -1]
        );
        assert_eq!(
            null_vector_phi(&alpha(&[0.9, 0.3, -0.2])).unwrap().entries,
            vec![1, -1, 1]
        );
        assert_eq!(
            null_vector_phi(&alpha(&[0.9, -0.3, -0.2])).unwrap().entries,
            vec![1, 1, 1]
        );
        assert!(matches!(
            null_vector_phi(&alpha(&[0.5, 0.5, 0.5])),
            Err(Error::NotDominant { .. })
        ));
    }

    #[test]
    fn phi_annihilates_the_rank_deficient_solution() {
        for values in [
            vec![0.9, 0.3, 0.2],
            vec![0.9, 0.3, -0.2],
            vec![0.9, -0.3, -0.2],
            vec![0.3, 0.9, 0.2],
            vec![-0.8, 0.3, 0.2, 0.1],
        ] {
            let a = alpha(&values);
            let s = solve_dm(&a).unwrap();
            let phi = null_vector_phi(&a).unwrap();
            let image = s.sigma_t.matvec(&phi.as_f64());
            let worst = image.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            assert!(worst <= 1e-12, "residual {worst} for {values:?}");
        }
    }

    #[test]
    fn column_identity_holds_for_the_worked_cases() {
        let a = alpha(&[0.9, 0.3, 0.2]);
        let s = solve_dm(&a).unwrap();
        assert!(dm_column_identity_residual(&s, &a).unwrap() <= 1e-12);

        let a = alpha(&[0.9, 0.3, -0.2]);
        let s = solve_dm(&a).unwrap();
        assert!(dm_column_identity_residual(&s, &a).unwrap() <= 1e-12);

        // n = 2: the leading column is the signed copy of the other.
        let a = alpha(&[0.7, -0.4]);
        let s = solve_dm(&a).unwrap();
        assert!(dm_column_identity_residual(&s, &a).unwrap() <= 1e-12);
    }

    #[test]
    fn column_identity_rejects_rank_one_solutions() {
        let a = alpha(&[0.5, 0.5, 0.5]);
        let s = solve_nd(&a).unwrap();
        assert!(matches!(
            dm_column_identity_residual(&s, &a),
            Err(Error::WrongRankClass(_))
        ));
    }
}
