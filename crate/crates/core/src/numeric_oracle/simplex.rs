//! Dense two-phase primal simplex with Bland's anti-cycling rule.
//!
//! Solves `maximize c'x` subject to `a_i x <= b_i` rows and per-variable
//! `[lo, hi]` bounds. Small and deterministic: entering column is the lowest
//! index with positive reduced cost, the leaving row breaks ratio ties on the
//! lowest basic variable index, so repeated runs pivot identically.

use crate::error::{Error, Result};

/// One inequality row `coeffs . x <= rhs`.
#[derive(Debug, Clone)]
pub struct LpConstraint {
    pub coeffs: Vec<f64>,
    pub rhs: f64,
}

const REDUCED_COST_TOL: f64 = 1e-9;
const PIVOT_TOL: f64 = 1e-10;
const FEAS_TOL: f64 = 1e-8;

struct Tableau {
    rows: Vec<Vec<f64>>,
    obj: Vec<f64>,
    basis: Vec<usize>,
    n_cols: usize, // includes the rhs column
}

impl Tableau {
    fn rhs_idx(&self) -> usize {
        self.n_cols - 1
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.rows[row][col];
        for v in &mut self.rows[row] {
            *v /= pivot;
        }
        let pivot_row = self.rows[row].clone();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row {
                continue;
            }
            let factor = r[col];
            if factor != 0.0 {
                for (v, p) in r.iter_mut().zip(&pivot_row) {
                    *v -= factor * p;
                }
            }
        }
        let factor = self.obj[col];
        if factor != 0.0 {
            for (v, p) in self.obj.iter_mut().zip(&pivot_row) {
                *v -= factor * p;
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule loop; returns `Err(LpUnbounded)` when an improving column
    /// has no blocking row.
    fn run(&mut self) -> Result<()> {
        let rhs = self.rhs_idx();
        loop {
            let entering = (0..rhs).find(|&j| self.obj[j] > REDUCED_COST_TOL);
            let Some(col) = entering else {
                return Ok(());
            };
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..self.rows.len() {
                let coef = self.rows[i][col];
                if coef > PIVOT_TOL {
                    let ratio = self.rows[i][rhs] / coef;
                    let better = match leave {
                        None => true,
                        Some((best_row, best_ratio)) => {
                            ratio < best_ratio - PIVOT_TOL
                                || (ratio <= best_ratio + PIVOT_TOL
                                    && self.basis[i] < self.basis[best_row])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((row, _)) = leave else {
                return Err(Error::LpUnbounded);
            };
            self.pivot(row, col);
        }
    }

    /// Install an objective over the current basis: reduced costs start at
    /// `c` and basic columns are priced out.
    fn set_objective(&mut self, c: &[f64]) {
        self.obj = vec![0.0; self.n_cols];
        self.obj[..c.len()].copy_from_slice(c);
        for i in 0..self.rows.len() {
            let cb = self.obj[self.basis[i]];
            if cb != 0.0 {
                let row = self.rows[i].clone();
                for (v, r) in self.obj.iter_mut().zip(&row) {
                    *v -= cb * r;
                }
            }
        }
    }

    fn objective_value(&self) -> f64 {
        -self.obj[self.rhs_idx()]
    }
}

/// Maximize `objective . x` over `constraints` and box `bounds`.
///
/// Lower bounds must be finite; upper bounds may be `f64::INFINITY`.
/// Infeasible and unbounded programs are reported as distinct errors.
pub fn solve_lp(
    objective: &[f64],
    constraints: &[LpConstraint],
    bounds: &[(f64, f64)],
) -> Result<Vec<f64>> {
    let k = objective.len();
    if bounds.len() != k {
        return Err(Error::DimensionMismatch(format!(
            "{} bounds for {} variables",
            bounds.len(),
            k
        )));
    }
    for (j, &(lo, hi)) in bounds.iter().enumerate() {
        if !lo.is_finite() {
            return Err(Error::DimensionMismatch(format!(
                "lower bound of variable {j} must be finite"
            )));
        }
        if hi < lo {
            return Err(Error::LpInfeasible);
        }
    }
    for c in constraints {
        if c.coeffs.len() != k {
            return Err(Error::DimensionMismatch(format!(
                "constraint has {} coefficients for {} variables",
                c.coeffs.len(),
                k
            )));
        }
    }

    // Shift to y = x - lo >= 0; finite upper bounds become rows.
    let lo: Vec<f64> = bounds.iter().map(|b| b.0).collect();
    let mut rows: Vec<(Vec<f64>, f64)> = Vec::new();
    for c in constraints {
        let shift: f64 = c.coeffs.iter().zip(&lo).map(|(a, l)| a * l).sum();
        rows.push((c.coeffs.clone(), c.rhs - shift));
    }
    for (j, &(l, h)) in bounds.iter().enumerate() {
        if h.is_finite() {
            let mut unit = vec![0.0; k];
            unit[j] = 1.0;
            rows.push((unit, h - l));
        }
    }

    let m = rows.len();
    let mut needs_artificial = Vec::new();
    for (i, (coeffs, rhs)) in rows.iter_mut().enumerate() {
        if *rhs < 0.0 {
            for v in coeffs.iter_mut() {
                *v = -*v;
            }
            *rhs = -*rhs;
            needs_artificial.push(i);
        }
    }
    let n_art = needs_artificial.len();
    let n_cols = k + m + n_art + 1;

    let mut t = Tableau {
        rows: Vec::with_capacity(m),
        obj: vec![0.0; n_cols],
        basis: vec![0; m],
        n_cols,
    };
    let mut art_of_row = vec![usize::MAX; m];
    for (a, &i) in needs_artificial.iter().enumerate() {
        art_of_row[i] = k + m + a;
    }
    for (i, (coeffs, rhs)) in rows.iter().enumerate() {
        let mut row = vec![0.0; n_cols];
        row[..k].copy_from_slice(coeffs);
        // Negated rows carry a surplus instead of a slack.
        row[k + i] = if art_of_row[i] == usize::MAX {
            1.0
        } else {
            -1.0
        };
        if art_of_row[i] != usize::MAX {
            row[art_of_row[i]] = 1.0;
        }
        row[n_cols - 1] = *rhs;
        t.rows.push(row);
        t.basis[i] = if art_of_row[i] == usize::MAX {
            k + i
        } else {
            art_of_row[i]
        };
    }

    if n_art > 0 {
        let mut phase1 = vec![0.0; n_cols - 1];
        phase1[k + m..k + m + n_art].fill(-1.0);
        t.set_objective(&phase1);
        t.run()?;
        if t.objective_value() < -FEAS_TOL {
            return Err(Error::LpInfeasible);
        }
        // Drive any artificial still sitting in the basis out of it; rows
        // that offer no pivot are redundant and get dropped.
        let mut drop_rows = Vec::new();
        for i in 0..t.rows.len() {
            if t.basis[i] < k + m {
                continue;
            }
            let col = (0..k + m).find(|&j| t.rows[i][j].abs() > PIVOT_TOL);
            match col {
                Some(j) => t.pivot(i, j),
                None => drop_rows.push(i),
            }
        }
        for &i in drop_rows.iter().rev() {
            t.rows.remove(i);
            t.basis.remove(i);
        }
        // Physically remove the artificial columns.
        for row in &mut t.rows {
            row.drain(k + m..k + m + n_art);
        }
        t.n_cols = k + m + 1;
        t.obj = vec![0.0; t.n_cols];
    }

    let mut phase2 = vec![0.0; k + m];
    phase2[..k].copy_from_slice(objective);
    t.set_objective(&phase2);
    t.run()?;

    let rhs = t.rhs_idx();
    let mut x = lo;
    for (i, &b) in t.basis.iter().enumerate() {
        if b < k {
            x[b] += t.rows[i][rhs];
        }
    }
    Ok(x)
}
