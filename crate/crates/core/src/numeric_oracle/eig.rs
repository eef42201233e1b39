//! Cyclic Jacobi eigendecomposition for dense symmetric matrices.
//!
//! The sweep order is fixed (row-major over the upper triangle), so the
//! result is deterministic for a given input. Accuracy comfortably meets the
//! crate-wide reconstruction contract `|M - Q L Q'| <= 1e-10 * n * |M|`.

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Full spectrum of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors, column `k` pairing with `eigenvalues[k]`.
    pub eigenvectors: Matrix,
}

const MAX_SWEEPS: usize = 64;

/// Eigendecompose a symmetric matrix; rejects asymmetry beyond `1e-12`.
pub fn eig_sym(m: &Matrix) -> Result<EigenDecomposition> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigendecomposition needs a square matrix, got {}x{}",
            m.n_rows(),
            m.n_cols()
        )));
    }
    let asym = m.asymmetry();
    if asym > 1e-12 {
        return Err(Error::NotSymmetric(asym));
    }

    let n = m.n_rows();
    let mut a = m.clone();
    let mut q = Matrix::identity(n);
    if n == 1 {
        return Ok(EigenDecomposition {
            eigenvalues: vec![a[(0, 0)]],
            eigenvectors: q,
        });
    }

    let scale = a.max_abs().max(1.0);
    let stop = f64::EPSILON * scale;
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n - 1 {
            for r in (p + 1)..n {
                off = off.max(a[(p, r)].abs());
            }
        }
        if off <= stop {
            break;
        }
        for p in 0..n - 1 {
            for r in (p + 1)..n {
                let apr = a[(p, r)];
                if apr.abs() <= stop * 1e-2 {
                    continue;
                }
                // Stable rotation angle (Numerical-Recipes form).
                let theta = 0.5 * (a[(r, r)] - a[(p, p)]) / apr;
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                let app = a[(p, p)];
                let arr = a[(r, r)];
                a[(p, p)] = c * c * app - 2.0 * s * c * apr + s * s * arr;
                a[(r, r)] = s * s * app + 2.0 * s * c * apr + c * c * arr;
                a[(p, r)] = 0.0;
                a[(r, p)] = 0.0;
                for k in 0..n {
                    if k == p || k == r {
                        continue;
                    }
                    let akp = a[(k, p)];
                    let akr = a[(k, r)];
                    a[(k, p)] = c * akp - s * akr;
                    a[(p, k)] = a[(k, p)];
                    a[(k, r)] = s * akp + c * akr;
                    a[(r, k)] = a[(k, r)];
                }
                for k in 0..n {
                    let qkp = q[(k, p)];
                    let qkr = q[(k, r)];
                    q[(k, p)] = c * qkp - s * qkr;
                    q[(k, r)] = s * qkp + c * qkr;
                }
            }
        }
    }

    // Ascending sort, stable on index so repeated eigenvalues keep sweep order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].partial_cmp(&a[(j, j)]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)]).collect();
    let mut eigenvectors = Matrix::zeros(n, n);
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            eigenvectors[(row, col)] = q[(row, src)];
        }
    }
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::outer;
    use crate::star_model::AlphaVector;
    use approx::assert_abs_diff_eq;

    fn reconstruction_error(m: &Matrix, e: &EigenDecomposition) -> f64 {
        let n = m.n_rows();
        let mut lambda = Matrix::zeros(n, n);
        for i in 0..n {
            lambda[(i, i)] = e.eigenvalues[i];
        }
        let rebuilt = e
            .eigenvectors
            .matmul(&lambda)
            .matmul(&e.eigenvectors.transpose());
        m.max_abs_diff(&rebuilt)
    }

    #[test]
    fn identity_has_unit_spectrum() {
        let e = eig_sym(&Matrix::identity(4)).unwrap();
        for v in &e.eigenvalues {
            assert_abs_diff_eq!(v, &1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn rank_one_outer_product_spectrum() {
        let a = [0.6, 0.4, 0.2];
        let m = outer(&a, &a);
        let e = eig_sym(&m).unwrap();
        assert_abs_diff_eq!(e.eigenvalues[0], 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(e.eigenvalues[1], 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(e.eigenvalues[2], 0.56, epsilon = 1e-13);
    }

    #[test]
    fn dominant_solution_has_exactly_one_zero_eigenvalue() {
        let alpha = AlphaVector::new(vec![0.9, 0.3, 0.2]).unwrap();
        let s = crate::closed_form::solve_dm(&alpha).unwrap();
        let e = eig_sym(&s.sigma_t).unwrap();
        let zeros = e
            .eigenvalues
            .iter()
            .filter(|v| v.abs() <= 1e-10 * 3.0)
            .count();
        assert_eq!(zeros, 1);
        assert!(e.eigenvalues[1] > 1e-6 && e.eigenvalues[2] > 1e-6);
    }

    #[test]
    fn reconstruction_and_orthonormality() {
        let m = Matrix::from_rows(&[
            vec![2.0, -1.0, 0.3, 0.0],
            vec![-1.0, 1.5, 0.2, -0.4],
            vec![0.3, 0.2, -0.7, 0.1],
            vec![0.0, -0.4, 0.1, 0.9],
        ])
        .unwrap();
        let e = eig_sym(&m).unwrap();
        assert!(reconstruction_error(&m, &e) <= 1e-10 * 4.0 * m.max_abs());
        let gram = e.eigenvectors.transpose().matmul(&e.eigenvectors);
        assert!(gram.max_abs_diff(&Matrix::identity(4)) <= 1e-10);
        // Ascending order.
        for w in e.eigenvalues.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = Matrix::from_rows(&[vec![1.0, 0.5], vec![0.3, 1.0]]).unwrap();
        assert!(matches!(eig_sym(&m), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn one_by_one_matrix_is_its_own_spectrum() {
        let m = Matrix::from_rows(&[vec![-2.5]]).unwrap();
        let e = eig_sym(&m).unwrap();
        assert_eq!(e.eigenvalues, vec![-2.5]);
        assert_eq!(e.eigenvectors[(0, 0)], 1.0);
    }

    #[test]
    fn deterministic_for_fixed_sweep_order() {
        let m = Matrix::from_rows(&[
            vec![1.0, 0.9, 0.1],
            vec![0.9, 1.0, -0.3],
            vec![0.1, -0.3, 1.0],
        ])
        .unwrap();
        let e1 = eig_sym(&m).unwrap();
        let e2 = eig_sym(&m).unwrap();
        assert_eq!(e1.eigenvalues, e2.eigenvalues);
        assert_eq!(e1.eigenvectors, e2.eigenvectors);
    }
}
