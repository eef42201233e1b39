//! Exact solver for the minimum signed-sum partition of a positive list,
//! plus the three diagnostic inequalities built on top of it.
//!
//! Given positive numbers `e_1..e_n`, the partition value is the smallest
//! achievable `|sum(A) - sum(A^c)|` over all subsets. The search is exact:
//! sign symmetry halves it to `2^(n-1)` candidates (element 1 is pinned to
//! the `+` side), enumerated in ascending mask order so ties resolve to the
//! lowest mask. No differencing heuristic is used anywhere; downstream
//! certificate constructions need the true minimum.

use crate::error::{Error, Result};

/// Result of the exact sign-partition search.
///
/// `F` holds the elements of the winning subset `A*`, `G` the complement.
/// `A*` is normalized to the side with the larger sum, so
/// `sum(F) - sum(G) = s_min >= 0` and the `signs` vector satisfies
/// `sum(signs[i] * e[i]) = s_min`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionResult {
    /// Minimum achievable absolute signed sum.
    pub s_min: f64,
    /// Bit `i` set means element `i` belongs to `A*`.
    pub subset_mask: u32,
    /// Elements of `A*`, in input order.
    pub f_values: Vec<f64>,
    /// Elements of the complement, in input order.
    pub g_values: Vec<f64>,
    /// Sum of the complement side.
    pub m: f64,
    /// Smallest element of `A*`.
    pub f_min: f64,
    /// Average of `A*`, i.e. `(m + s_min) / |F|`.
    pub f_avg: f64,
    /// Average of the complement; `None` when it is empty.
    pub g_avg: Option<f64>,
    /// Per-element signs achieving the minimum, `+1` on the `A*` side.
    pub signs: Vec<i8>,
}

struct Search<'a> {
    e: &'a [f64],
    total: f64,
    best_abs: f64,
    best_mask: u32,
}

impl Search<'_> {
    /// Walk elements from the highest index down, excluding before including,
    /// which visits subset masks in ascending numeric order. `sum` carries the
    /// partial sum of included elements in O(1) per node.
    fn descend(&mut self, element: usize, mask: u32, sum: f64) {
        if element == 0 {
            let diff = 2.0 * (self.e[0] + sum) - self.total;
            if diff.abs() < self.best_abs {
                self.best_abs = diff.abs();
                self.best_mask = mask | 1;
            }
            return;
        }
        self.descend(element - 1, mask, sum);
        self.descend(element - 1, mask | (1 << element), sum + self.e[element]);
    }
}

/// Exact global minimum of `|sum(A) - sum(A^c)|` over all subsets.
///
/// Rejects empty or non-positive input and any list longer than 30 elements
/// (the search is exponential by design). Deterministic: among equally good
/// partitions the lowest mask with element 1 on the `+` side wins, after
/// which `A*` is flipped, if needed, onto the larger-sum side.
pub fn s_min(e: &[f64]) -> Result<PartitionResult> {
    let n = e.len();
    if n == 0 {
        return Err(Error::TooFewElements { need: 1, got: 0 });
    }
    if n > 30 {
        return Err(Error::PartitionTooLarge(n));
    }
    for (index, &value) in e.iter().enumerate() {
        if value <= 0.0 || value.is_nan() {
            return Err(Error::NonPositiveEntry { index, value });
        }
    }

    let mut search = Search {
        e,
        total: e.iter().sum(),
        best_abs: f64::INFINITY,
        best_mask: 0,
    };
    search.descend(n - 1, 0, 0.0);

    let mut in_star: Vec<bool> = (0..n).map(|i| search.best_mask >> i & 1 == 1).collect();
    let sum_in: f64 = (0..n).filter(|&i| in_star[i]).map(|i| e[i]).sum();
    let sum_out: f64 = (0..n).filter(|&i| !in_star[i]).map(|i| e[i]).sum();
    if sum_in < sum_out {
        for flag in &mut in_star {
            *flag = !*flag;
        }
    }

    let f_values: Vec<f64> = (0..n).filter(|&i| in_star[i]).map(|i| e[i]).collect();
    let g_values: Vec<f64> = (0..n).filter(|&i| !in_star[i]).map(|i| e[i]).collect();
    let m: f64 = g_values.iter().sum();
    let s_min = f_values.iter().sum::<f64>() - m;
    let subset_mask = (0..n)
        .filter(|&i| in_star[i])
        .fold(0u32, |acc, i| acc | 1 << i);
    let f_min = f_values.iter().cloned().fold(f64::INFINITY, f64::min);
    let f_avg = (m + s_min) / f_values.len() as f64;
    let g_avg = if g_values.is_empty() {
        None
    } else {
        Some(m / g_values.len() as f64)
    };
    let signs = in_star.iter().map(|&f| if f { 1 } else { -1 }).collect();

    Ok(PartitionResult {
        s_min,
        subset_mask,
        f_values,
        g_values,
        m,
        f_min,
        f_avg,
        g_avg,
        signs,
    })
}

/// The partition minimum never exceeds the smallest element on the winning
/// side: if it did, moving that element across would improve the partition.
pub fn lemma4_check(result: &PartitionResult) -> bool {
    result.s_min <= result.f_min + 1e-12
}

/// Slack in the pairwise-product bound
/// `sum_{i != j} e_i e_j <= n (n-1) e_avg^2`; non-negative for every positive
/// list, zero exactly when all elements are equal.
pub fn lemma5_gap(e: &[f64]) -> Result<f64> {
    if e.len() < 2 {
        return Err(Error::TooFewElements {
            need: 2,
            got: e.len(),
        });
    }
    for (index, &value) in e.iter().enumerate() {
        if value <= 0.0 || value.is_nan() {
            return Err(Error::NonPositiveEntry { index, value });
        }
    }
    let n = e.len() as f64;
    let sum: f64 = e.iter().sum();
    let sum_sq: f64 = e.iter().map(|x| x * x).sum();
    let avg = sum / n;
    let pairwise = sum * sum - sum_sq;
    Ok(n * (n - 1.0) * avg * avg - pairwise)
}

/// Cross term `sum_{i != j} c_i c_j e_i e_j` at a minimizing sign vector,
/// computed through the identity `(sum c_i e_i)^2 - sum e_i^2`.
///
/// Strictly negative whenever `n >= 2`: the signed sum equals the partition
/// minimum, which is at most one element, while the subtracted square sum
/// covers them all. Rejects singletons and sign vectors that do not achieve
/// the minimum.
pub fn lemma6_cross_term(e: &[f64], c: &[i8]) -> Result<f64> {
    if e.len() < 2 {
        return Err(Error::TooFewElements {
            need: 2,
            got: e.len(),
        });
    }
    if c.len() != e.len() {
        return Err(Error::DimensionMismatch(format!(
            "sign vector has {} entries for {} elements",
            c.len(),
            e.len()
        )));
    }
    if let Some(bad) = c.iter().position(|&s| s != 1 && s != -1) {
        return Err(Error::DimensionMismatch(format!(
            "sign entry {bad} must be +1 or -1"
        )));
    }
    let optimum = s_min(e)?;
    let signed_sum: f64 = e.iter().zip(c).map(|(&x, &s)| f64::from(s) * x).sum();
    if (signed_sum.abs() - optimum.s_min).abs() > 1e-12 {
        return Err(Error::SignsNotOptimal {
            achieved: signed_sum.abs(),
            expected: optimum.s_min,
        });
    }
    let sum_sq: f64 = e.iter().map(|x| x * x).sum();
    Ok(signed_sum * signed_sum - sum_sq)
}
