//! Error type shared by every module in the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while validating inputs or running a solver.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A loading vector needs at least two entries.
    #[error("alpha needs at least 2 loadings, got {0}")]
    TooFewLoadings(usize),

    /// Loadings must satisfy 0 < |value| < 1; zero and unit magnitudes are
    /// rejected rather than perturbed.
    #[error("loading out of range at index {index}: {value} (require 0 < |loading| < 1)")]
    LoadingOutOfRange { index: usize, value: f64 },

    /// An operation that only applies to non-dominant vectors was given a
    /// dominant one.
    #[error("alpha is dominant (margin {margin}); operation requires a non-dominant vector")]
    NotNonDominant { margin: f64 },

    /// An operation that only applies to dominant vectors was given a
    /// non-dominant one.
    #[error("alpha is non-dominant (margin {margin}); operation requires a dominant vector")]
    NotDominant { margin: f64 },

    /// Guard against corrupted input: the rank n-1 diagonal formulas produced
    /// a negative noise variance.
    #[error("negative diagonal entry {value} at index {index} in rank n-1 construction")]
    NegativeDiagonal { index: usize, value: f64 },

    /// The null-basis scaling requires beta_nn <= 1, which holds exactly when
    /// alpha is non-dominant; a larger value proves dominance.
    #[error("dominance violation: beta_nn = {beta_nn} exceeds 1")]
    DominanceViolation { beta_nn: f64 },

    /// A matrix fed to `estimate_alpha` is not consistent with a star model.
    #[error("non-star input: {0}")]
    NonStarInput(String),

    /// Sampling and covariance estimation need a minimum batch size.
    #[error("need at least {need} samples, got {got}")]
    TooFewSamples { need: usize, got: usize },

    /// Loading estimation needs at least three observables.
    #[error("alpha estimation needs n >= 3, got {0}")]
    TooFewForEstimation(usize),

    /// Sign-partition inputs must be strictly positive.
    #[error("partition entries must be positive; entry {index} is {value}")]
    NonPositiveEntry { index: usize, value: f64 },

    /// The exact subset search is exponential; refuse sizes that cannot
    /// finish.
    #[error("partition size {0} exceeds the exact-search limit of 30")]
    PartitionTooLarge(usize),

    /// Generic arity guard for list-valued inputs.
    #[error("need at least {need} elements, got {got}")]
    TooFewElements { need: usize, got: usize },

    /// A sign vector handed to the cross-term check does not achieve the
    /// partition minimum.
    #[error("sign vector does not achieve the minimum: |sum| = {achieved}, s_min = {expected}")]
    SignsNotOptimal { achieved: f64, expected: f64 },

    /// Symmetric-only routine given an asymmetric matrix.
    #[error("matrix is not symmetric: max asymmetry {0}")]
    NotSymmetric(f64),

    /// Positive semidefiniteness check failed.
    #[error("matrix is not positive semidefinite")]
    NotPsd,

    /// A star covariance must carry ones on the diagonal.
    #[error("diagonal entry {value} at index {index} is not 1")]
    NotUnitDiagonal { index: usize, value: f64 },

    /// Shapes do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The linear program has an empty feasible region.
    #[error("linear program is infeasible")]
    LpInfeasible,

    /// The linear program objective is unbounded above.
    #[error("linear program is unbounded")]
    LpUnbounded,

    /// A solution with the wrong rank class was passed to a rank-specific
    /// check.
    #[error("rank class mismatch: {0}")]
    WrongRankClass(String),
}
