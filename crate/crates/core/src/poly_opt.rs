//! Optimal even polynomial bounds of arbitrary degree.
//!
//! Any even `P` with `P(x) >= |x|` on `[-Δ, Δ]` gives `E(G) <= Σ c_{2j} M_{2j}`,
//! and any `P <= |x|` gives the matching lower bound. This module searches
//! the best such polynomial of degree `2k` by linear programming over a grid
//! of sample points, then certifies the result on the whole interval.
//!
//! The LP is posed in dimensionless form: with `u = x/Δ` and
//! `P(x) = Δ Σ y_j u^{2j}`, the constraint is `Σ y_j u^{2j} >= u` on `[0, 1]`
//! and the objective is `Σ y_j μ_j` with `μ_j = Δ^{1-2j} M_{2j}`. It is solved
//! through its dual, a standard-form program with `k + 1` rows.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::{verify_majorization_on, Direction, EvenPolynomial, Majorization};
use crate::quartic::dilate;
use crate::simplex;
use crate::spectral::trace_moment;

pub const MAX_DEGREE: usize = 16;
pub const DEFAULT_COEFFICIENT_CAP: f64 = 1e6;
pub const MAX_CUT_ROUNDS: usize = 50;
/// A cutting-plane round stops once the worst unit-scale violation is below this.
const CUT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem {
    /// Even polynomial degree `2k`.
    pub degree: usize,
    /// `M0, M2, ..., M_{2k}`.
    pub moments: Vec<f64>,
    pub delta: f64,
    /// Sample points in `[0, Δ]`, strictly increasing, endpoints included.
    pub grid: Vec<f64>,
    pub direction: Direction,
    /// Bound on `|c_{2j}| Δ^{2j-1}`.
    pub coefficient_cap: f64,
}

/// `size` Chebyshev–Lobatto points on `[0, end]`.
pub fn chebyshev_grid(size: usize, end: f64) -> Vec<f64> {
    let size = size.max(2);
    let mut grid: Vec<f64> = (0..size)
        .map(|i| {
            let theta = std::f64::consts::PI * i as f64 / (size - 1) as f64;
            0.5 * end * (1.0 - theta.cos())
        })
        .collect();
    grid[0] = 0.0;
    grid[size - 1] = end;
    grid
}

/// Default grid size for degree `2k`.
pub fn default_grid_size(degree: usize) -> usize {
    (128 * (degree / 2)).max(64)
}

impl LpProblem {
    /// A problem with the default Chebyshev grid and coefficient cap.
    pub fn new(degree: usize, moments: Vec<f64>, delta: f64, direction: Direction) -> Self {
        LpProblem {
            degree,
            moments,
            delta,
            grid: chebyshev_grid(default_grid_size(degree), delta),
            direction,
            coefficient_cap: DEFAULT_COEFFICIENT_CAP,
        }
    }

    /// Exact moments of `g` up to `M_degree` from the trace oracle.
    pub fn for_graph(g: &Graph, degree: usize, direction: Direction) -> Result<Self> {
        check_degree(degree)?;
        let moments = (0..=degree / 2)
            .map(|j| trace_moment(g, 2 * j as u32).map(|m| m as f64))
            .collect::<Result<Vec<_>>>()?;
        Ok(LpProblem::new(
            degree,
            moments,
            g.max_degree() as f64,
            direction,
        ))
    }

    fn validate(&self) -> Result<()> {
        check_degree(self.degree)?;
        let k = self.degree / 2;
        let fail = |msg: String| Err(Error::DomainError(msg));
        if self.moments.len() != k + 1 {
            return fail(format!(
                "need {} moments, got {}",
                k + 1,
                self.moments.len()
            ));
        }
        if !(self.delta.is_finite() && self.delta > 0.0) {
            return fail(format!("Δ must be positive, got {}", self.delta));
        }
        if self.grid.len() < (64 * k).max(2)
            || self.grid.first() != Some(&0.0)
            || self.grid.last() != Some(&self.delta)
            || self.grid.windows(2).any(|w| w[0] >= w[1])
        {
            return fail(
                "grid must be strictly increasing over [0, Δ] with at least 64k points".into(),
            );
        }
        if !(self.coefficient_cap.is_finite() && self.coefficient_cap >= 1.0) {
            return fail(format!(
                "coefficient cap must be at least 1, got {}",
                self.coefficient_cap
            ));
        }
        Ok(())
    }
}

fn check_degree(degree: usize) -> Result<()> {
    if !degree.is_multiple_of(2) || degree > MAX_DEGREE {
        return Err(Error::DomainError(format!(
            "degree must be even and at most {MAX_DEGREE}, got {degree}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    /// Some coefficient sits on the cap.
    Capped,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    /// The bounding polynomial on `[-Δ, Δ]`.
    pub coefficients: EvenPolynomial,
    /// `Σ c_{2j} M_{2j}`: an upper bound for `Above`, a lower bound for `Below`.
    pub objective: f64,
    pub status: LpStatus,
    pub certified: bool,
    pub rounds: usize,
}

/// Unit-scale LP on the points `us`, returning `y`.
fn solve_on_points(
    us: &[f64],
    scaled_moments: &[f64],
    direction: Direction,
    cap: f64,
) -> Result<Vec<f64>> {
    let vars = scaled_moments.len();
    let sign = match direction {
        Direction::Above => 1.0,
        Direction::Below => -1.0,
    };
    // Primal: min (sign μ)ᵀ y  s.t.  sign Σ y_j u^{2j} >= sign u,  -cap <= y_j <= cap.
    // Dual:   max hᵀ w  s.t.  Gᵀ w = sign μ,  w >= 0; the primal y are its multipliers.
    let cols = us.len() + 2 * vars;
    let mut a = vec![vec![0.0; cols]; vars];
    let mut h = vec![0.0; cols];
    for (i, &u) in us.iter().enumerate() {
        let u2 = u * u;
        let mut pow = 1.0;
        for row in a.iter_mut() {
            row[i] = sign * pow;
            pow *= u2;
        }
        h[i] = sign * u;
    }
    for (j, row) in a.iter_mut().enumerate() {
        let base = us.len() + 2 * j;
        row[base] = 1.0;
        row[base + 1] = -1.0;
        h[base] = -cap;
        h[base + 1] = -cap;
    }
    let b: Vec<f64> = scaled_moments.iter().map(|m| sign * m).collect();
    match simplex::maximize(&a, &b, &h) {
        Ok(out) => Ok(out.duals),
        Err(Error::Unbounded) => Err(Error::Infeasible),
        Err(e) => Err(e),
    }
}

fn unit_poly(y: &[f64]) -> EvenPolynomial {
    EvenPolynomial::new(y.to_vec(), 1.0).expect("finite LP solution")
}

fn check_unit(y: &[f64], direction: Direction, grid_size: usize) -> Majorization {
    verify_majorization_on(&unit_poly(y), direction, 1.0, grid_size)
}

/// Best even polynomial bound of the requested degree and direction.
///
/// After each LP solve the polynomial is checked on a grid ten times finer
/// than the LP grid plus all stationary points; the worst violator joins the
/// constraint set and the LP is solved again. Whatever violation remains
/// when the loop ends is absorbed into the constant term, so every returned
/// solution is certified on the continuous interval.
pub fn solve_bound_lp(p: &LpProblem) -> Result<LpSolution> {
    p.validate()?;
    let delta = p.delta;
    let scaled: Vec<f64> = p
        .moments
        .iter()
        .enumerate()
        .map(|(j, m)| m * delta / delta.powi(2 * j as i32))
        .collect();
    let mut us: Vec<f64> = p.grid.iter().map(|x| x / delta).collect();
    let check_size = 10 * p.grid.len();

    let mut rounds = 0;
    let (mut y, check) = loop {
        rounds += 1;
        let y = solve_on_points(&us, &scaled, p.direction, p.coefficient_cap)?;
        let check = check_unit(&y, p.direction, check_size);
        if check.worst_gap >= -CUT_TOLERANCE || rounds == MAX_CUT_ROUNDS {
            break (y, check);
        }
        let pos = us.partition_point(|&u| u < check.worst_x);
        if us.get(pos) == Some(&check.worst_x) {
            break (y, check);
        }
        us.insert(pos, check.worst_x);
    };

    if check.worst_gap < 0.0 {
        let shift = -check.worst_gap * (1.0 + 1e-9) + f64::EPSILON;
        match p.direction {
            Direction::Above => y[0] += shift,
            Direction::Below => y[0] -= shift,
        }
    }
    let final_check = check_unit(&y, p.direction, check_size);
    if !final_check.ok {
        return Err(Error::LpNoConvergence { rounds });
    }

    let capped = y
        .iter()
        .any(|v| v.abs() >= p.coefficient_cap * (1.0 - 1e-9));
    let objective = y.iter().zip(&scaled).map(|(a, b)| a * b).sum();
    Ok(LpSolution {
        coefficients: dilate(&unit_poly(&y), delta)?,
        objective,
        status: if capped {
            LpStatus::Capped
        } else {
            LpStatus::Optimal
        },
        certified: true,
        rounds,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub degree: usize,
    pub upper: f64,
    pub lower: f64,
    pub certified: bool,
}

/// Upper and lower bounds for every even degree `2..=max_degree`.
///
/// A certified polynomial of degree `2k` is also admissible at degree
/// `2k + 2`, so each row keeps the better of the new LP solution and the
/// previous row; the columns are monotone by construction.
pub fn bound_sweep(g: &Graph, max_degree: usize) -> Result<Vec<SweepRow>> {
    check_degree(max_degree)?;
    if max_degree < 2 {
        return Err(Error::DomainError("sweep needs max_degree >= 2".into()));
    }
    let delta = g.max_degree() as f64;
    let degrees = (2..=max_degree).step_by(2);
    if delta == 0.0 {
        return Ok(degrees
            .map(|degree| SweepRow {
                degree,
                upper: 0.0,
                lower: 0.0,
                certified: true,
            })
            .collect());
    }
    let all_moments = (0..=max_degree / 2)
        .map(|j| trace_moment(g, 2 * j as u32).map(|m| m as f64))
        .collect::<Result<Vec<_>>>()?;
    let grid = chebyshev_grid(default_grid_size(max_degree), delta);

    let mut rows: Vec<SweepRow> = Vec::new();
    for degree in degrees {
        let solve = |direction| {
            solve_bound_lp(&LpProblem {
                degree,
                moments: all_moments[..=degree / 2].to_vec(),
                delta,
                grid: grid.clone(),
                direction,
                coefficient_cap: DEFAULT_COEFFICIENT_CAP,
            })
        };
        let upper = solve(Direction::Above)?;
        let lower = solve(Direction::Below)?;
        let (mut up, mut low) = (upper.objective, lower.objective);
        if let Some(prev) = rows.last() {
            up = up.min(prev.upper);
            low = low.max(prev.lower);
        }
        rows.push(SweepRow {
            degree,
            upper: up,
            lower: low,
            certified: upper.certified && lower.certified,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, FamilySpec};
    use crate::moments::{abc_triple, moment_summary};
    use crate::polynomial::verify_majorization;
    use crate::quartic::theorem1_bound;
    use crate::spectral::energy;

    fn gen(s: &str) -> Graph {
        generate(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn degree_zero_is_trivial() {
        let g = gen("petersen");
        let up = solve_bound_lp(&LpProblem::for_graph(&g, 0, Direction::Above).unwrap()).unwrap();
        assert!((up.objective - 30.0).abs() < 1e-9, "{}", up.objective);
        let low = solve_bound_lp(&LpProblem::for_graph(&g, 0, Direction::Below).unwrap()).unwrap();
        assert!(low.objective.abs() < 1e-9);
    }

    #[test]
    fn petersen_quartic_matches_closed_form() {
        let g = gen("petersen");
        let closed = theorem1_bound(&abc_triple(&moment_summary(&g).unwrap()).unwrap());
        let sol = solve_bound_lp(&LpProblem::for_graph(&g, 4, Direction::Above).unwrap()).unwrap();
        assert!(sol.certified);
        assert!(sol.objective >= 16.0);
        assert!(
            sol.objective <= closed + 1e-6,
            "{} vs {closed}",
            sol.objective
        );
        assert!((sol.objective - closed).abs() <= 1e-4 * closed);
        let check = verify_majorization(&sol.coefficients, Direction::Above, 40_000);
        assert!(check.ok, "{check:?}");
    }

    #[test]
    fn heawood_lower_bound() {
        let g = gen("heawood");
        let sol = solve_bound_lp(&LpProblem::for_graph(&g, 4, Direction::Below).unwrap()).unwrap();
        let e = 6.0 + 12.0 * 2f64.sqrt();
        assert!(sol.certified);
        assert!(sol.objective <= e + 1e-9, "{}", sol.objective);
        // at least the degree-2 bound M2/Δ
        assert!(sol.objective >= 14.0 - 1e-9, "{}", sol.objective);
    }

    #[test]
    fn k2_sweep_is_exact() {
        for row in bound_sweep(&gen("complete:2"), 8).unwrap() {
            assert!((row.upper - 2.0).abs() < 1e-9, "{row:?}");
            assert!((row.lower - 2.0).abs() < 1e-9, "{row:?}");
        }
    }

    #[test]
    fn c4_quartic_reaches_energy() {
        let g = gen("cycle:4");
        let sol = solve_bound_lp(&LpProblem::for_graph(&g, 4, Direction::Above).unwrap()).unwrap();
        assert!(sol.objective >= 4.0 - 1e-9);
        assert!(sol.objective <= 4.0 + 1e-4, "{}", sol.objective);
    }

    #[test]
    fn sweep_brackets_energy() {
        let g = gen("petersen");
        let rows = bound_sweep(&g, 8).unwrap();
        assert_eq!(
            rows.iter().map(|r| r.degree).collect::<Vec<_>>(),
            vec![2, 4, 6, 8]
        );
        let e = energy(&g).unwrap();
        for w in rows.windows(2) {
            assert!(w[1].upper <= w[0].upper && w[1].lower >= w[0].lower);
        }
        for r in &rows {
            assert!(r.certified);
            assert!(r.lower - 1e-6 <= e && e <= r.upper + 1e-6, "{r:?}");
        }
        assert!((rows[1].upper - 16.407_544_820_340_81).abs() < 1e-3);
    }

    #[test]
    fn scale_invariance() {
        let g = gen("gnp:10:0.5:3");
        let p = LpProblem::for_graph(&g, 6, Direction::Above).unwrap();
        let d = p.delta;
        let unit = LpProblem::new(
            6,
            p.moments
                .iter()
                .enumerate()
                .map(|(j, m)| m / d.powi(2 * j as i32))
                .collect(),
            1.0,
            Direction::Above,
        );
        let direct = solve_bound_lp(&p).unwrap().objective;
        let scaled = solve_bound_lp(&unit).unwrap().objective * d;
        assert!(
            (direct - scaled).abs() <= 1e-7 * direct,
            "{direct} vs {scaled}"
        );
    }

    #[test]
    fn rejects_bad_problems() {
        let g = gen("cycle:5");
        assert!(LpProblem::for_graph(&g, 3, Direction::Above).is_err());
        assert!(LpProblem::for_graph(&g, 18, Direction::Above).is_err());
        let mut p = LpProblem::for_graph(&g, 4, Direction::Above).unwrap();
        p.grid.swap(3, 4);
        assert!(matches!(solve_bound_lp(&p), Err(Error::DomainError(_))));
        let mut p = LpProblem::for_graph(&g, 4, Direction::Above).unwrap();
        p.moments.pop();
        assert!(solve_bound_lp(&p).is_err());
        assert!(bound_sweep(&g, 0).is_err());
    }
}
