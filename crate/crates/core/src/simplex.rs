//! Dense two-phase tableau simplex for small standard-form programs
//!
//! ```text
//! maximize cᵀx  subject to  A x = b,  x >= 0
//! ```
//!
//! Pivoting follows Bland's rule, so the method terminates on degenerate
//! problems. Intended for a handful of rows and a few thousand columns.

use crate::error::{Error, Result};

const PIVOT_EPS: f64 = 1e-11;
const FEASIBILITY_EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct LpOutcome {
    pub x: Vec<f64>,
    pub objective: f64,
    /// Optimal multipliers `y` of the dual `min bᵀy s.t. Aᵀy >= c`.
    pub duals: Vec<f64>,
    pub pivots: usize,
}

struct Tableau {
    rows: usize,
    cols: usize,
    /// `rows x (cols + 1)`, last column is the right-hand side.
    t: Vec<f64>,
    basis: Vec<usize>,
    pivots: usize,
}

impl Tableau {
    #[inline]
    fn at(&self, r: usize, c: usize) -> f64 {
        self.t[r * (self.cols + 1) + c]
    }

    fn rhs(&self, r: usize) -> f64 {
        self.at(r, self.cols)
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let w = self.cols + 1;
        let p = self.at(pr, pc);
        for v in &mut self.t[pr * w..(pr + 1) * w] {
            *v /= p;
        }
        let pivot_row: Vec<f64> = self.t[pr * w..(pr + 1) * w].to_vec();
        for r in 0..self.rows {
            if r == pr {
                continue;
            }
            let f = self.t[r * w + pc];
            if f == 0.0 {
                continue;
            }
            for (v, pv) in self.t[r * w..(r + 1) * w].iter_mut().zip(&pivot_row) {
                *v -= f * pv;
            }
            self.t[r * w + pc] = 0.0;
        }
        self.basis[pr] = pc;
        self.pivots += 1;
    }

    /// Reduced costs `c_j - c_Bᵀ B⁻¹ a_j` for every column.
    fn reduced_costs(&self, cost: &[f64]) -> Vec<f64> {
        let mut d = cost.to_vec();
        for r in 0..self.rows {
            let cb = cost[self.basis[r]];
            if cb == 0.0 {
                continue;
            }
            for (j, dj) in d.iter_mut().enumerate() {
                *dj -= cb * self.at(r, j);
            }
        }
        d
    }

    /// Runs primal simplex for `cost` over columns `0..allowed`.
    fn optimize(&mut self, cost: &[f64], allowed: usize, max_pivots: usize) -> Result<()> {
        loop {
            if self.pivots > max_pivots {
                return Err(Error::DomainError(format!(
                    "simplex exceeded {max_pivots} pivots"
                )));
            }
            let d = self.reduced_costs(cost);
            let Some(enter) = (0..allowed).find(|&j| d[j] > PIVOT_EPS) else {
                return Ok(());
            };
            let mut leave: Option<(usize, f64)> = None;
            for r in 0..self.rows {
                let a = self.at(r, enter);
                if a <= PIVOT_EPS {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                leave = match leave {
                    None => Some((r, ratio)),
                    Some((lr, lratio)) => {
                        if ratio < lratio - 1e-12
                            || (ratio <= lratio + 1e-12 && self.basis[r] < self.basis[lr])
                        {
                            Some((r, ratio))
                        } else {
                            Some((lr, lratio))
                        }
                    }
                };
            }
            let Some((pr, _)) = leave else {
                return Err(Error::Unbounded);
            };
            self.pivot(pr, enter);
        }
    }
}

/// Solves `max cᵀx s.t. A x = b, x >= 0` with `A` given row by row.
pub fn maximize(a: &[Vec<f64>], b: &[f64], c: &[f64]) -> Result<LpOutcome> {
    let rows = a.len();
    let n = c.len();
    assert_eq!(b.len(), rows, "one right-hand side per row");
    assert!(
        a.iter().all(|row| row.len() == n),
        "ragged constraint matrix"
    );

    // columns: n structural, then one artificial per row
    let cols = n + rows;
    let w = cols + 1;
    let mut t = vec![0.0; rows * w];
    let mut sign = vec![1.0; rows];
    for r in 0..rows {
        if b[r] < 0.0 {
            sign[r] = -1.0;
        }
        for j in 0..n {
            t[r * w + j] = sign[r] * a[r][j];
        }
        t[r * w + n + r] = 1.0;
        t[r * w + cols] = sign[r] * b[r];
    }
    let mut tab = Tableau {
        rows,
        cols,
        t,
        basis: (n..cols).collect(),
        pivots: 0,
    };
    let max_pivots = 50 * (cols + rows) + 1000;

    // phase 1: drive the artificials to zero
    let mut phase1 = vec![0.0; cols];
    phase1[n..].iter_mut().for_each(|v| *v = -1.0);
    tab.optimize(&phase1, cols, max_pivots)?;
    let infeasibility: f64 = (0..rows)
        .filter(|&r| tab.basis[r] >= n)
        .map(|r| tab.rhs(r))
        .sum();
    let scale = b.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    if infeasibility > FEASIBILITY_EPS * scale {
        return Err(Error::Infeasible);
    }
    for r in 0..rows {
        if tab.basis[r] >= n {
            if let Some(j) = (0..n).find(|&j| tab.at(r, j).abs() > PIVOT_EPS) {
                tab.pivot(r, j);
            }
        }
    }

    // phase 2 over structural columns only
    let mut cost = vec![0.0; cols];
    cost[..n].copy_from_slice(c);
    tab.optimize(&cost, n, max_pivots)?;

    let mut x = vec![0.0; n];
    for r in 0..rows {
        if tab.basis[r] < n {
            x[tab.basis[r]] = tab.rhs(r).max(0.0);
        }
    }
    // y = c_Bᵀ B⁻¹; B⁻¹ sits in the artificial columns, up to the row flips
    let duals = (0..rows)
        .map(|i| {
            sign[i]
                * (0..rows)
                    .map(|r| cost[tab.basis[r]] * tab.at(r, n + i))
                    .sum::<f64>()
        })
        .collect();
    let objective = c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum();
    Ok(LpOutcome {
        x,
        objective,
        duals,
        pivots: tab.pivots,
    })
}
