//! Constrained minimum trace factor analysis (CMTFA) for star-structured
//! Gaussian covariance matrices.
//!
//! A star model explains `n` observables through a single latent factor:
//! `X = alpha * Y + Z` with unit-variance observables, so the population
//! covariance is a rank-1 matrix plus a diagonal. CMTFA asks for the split
//! `sigma_x = sigma_t + diag(d)` with both parts positive semidefinite,
//! `d >= 0`, and the diagonal mass `sum(d_i)` maximal. For star covariances
//! the optimum has a closed form with exactly two shapes, decided by whether
//! the largest loading magnitude exceeds the sum of the others:
//!
//! - non-dominant loadings: `sigma_t` is the rank-1 outer product
//!   `alpha alpha'` and `d_i = 1 - alpha_i^2` (the latent star is recovered);
//! - dominant loadings: `sigma_t` has rank `n-1` with a specific diagonal
//!   and the same off-diagonal products.
//!
//! Both optima come with constructive certificates — null-space columns
//! whose Hadamard squares sum to the all-ones vector — and every answer can
//! be cross-checked against an independent cutting-plane solver that never
//! touches the closed-form code path.
//!
//! ```
//! use cmtfa::{build_sigma_x, solve, AlphaVector, RankClass};
//!
//! let alpha = AlphaVector::new(vec![0.9, 0.3, 0.2]).unwrap();
//! let solution = solve(&alpha);
//! assert_eq!(solution.rank_class, RankClass::RankNMinusOne);
//! assert!((solution.trace_sigma_t - 0.78).abs() < 1e-12);
//!
//! let cert = cmtfa::build_t_dm(&alpha).unwrap();
//! let verified =
//!     cmtfa::verify_certificate(&build_sigma_x(&alpha), &solution, &cert, 1e-8).unwrap();
//! assert!(verified.verdict);
//! ```
//!
//! All types are immutable after construction and every operation is pure
//! given its arguments (sampling is pure given the seed), so the whole crate
//! is safe to use from multiple threads without synchronization.

pub mod certificate;
pub mod closed_form;
pub mod error;
pub mod linalg;
pub mod numeric_oracle;
pub mod partition;
pub mod star_model;

pub use certificate::{
    build_null_basis, build_t_dm, build_t_nd, choose_c, solve_beta, verify_certificate, CaseTag,
    Certificate, NullBasisConstruction, DEFAULT_CERT_TOL,
};
pub use closed_form::{
    dm_column_identity_residual, null_vector_phi, solve, solve_dm, solve_nd, CmtfaSolution,
    RankClass, SignVectorPhi,
};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use numeric_oracle::{
    compare, eig_sym, solve_cmtfa_numeric, solve_lp, ComparisonReport, Cut, EigenDecomposition,
    LpConstraint, OracleSolution, OracleStatus, DEFAULT_ENTRYWISE_TOL, DEFAULT_MAX_ITER,
    DEFAULT_OBJECTIVE_TOL, DEFAULT_TOL_FEAS,
};
pub use partition::{lemma4_check, lemma5_gap, lemma6_cross_term, s_min, PartitionResult};
pub use star_model::{
    build_sigma_x, classify_dominance, estimate_alpha, sample_covariance, sample_latent,
    AlphaVector, DominanceClass, DominanceLabel, LatentSampleBatch, StarCovariance,
};
