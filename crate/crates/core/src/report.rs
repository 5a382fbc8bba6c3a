//! Per-graph analysis: exact energy next to every bound.

use crate::error::Result;
use crate::extremal::{classify_with_spectrum, EqualityClass};
use crate::graph::Graph;
use crate::moments::{abc_triple, moment_summary, AbcTriple, MomentSummary};
use crate::poly_opt::{solve_bound_lp, LpProblem};
use crate::polynomial::Direction;
use crate::quartic::{
    bound_at_r, bound_from_polynomial, dilate, optimal_r, pr_coefficients, theorem1_bound,
    van_dam_bound,
};
use crate::spectral::eigenvalues;
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    pub tolerances: Tolerances,
    /// Also solve the polynomial LP at this even degree.
    pub lp_degree: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub label: Option<String>,
    pub summary: MomentSummary,
    /// Absent for edgeless graphs.
    pub triple: Option<AbcTriple>,
    pub optimal_r: Option<f64>,
    pub r_clamped: bool,
    pub energy: f64,
    pub theorem1_bound: f64,
    /// Present for regular graphs with at least one edge.
    pub van_dam_bound: Option<f64>,
    pub lp_upper: Option<f64>,
    pub lp_lower: Option<f64>,
    /// `theorem1_bound / energy`; 1 when both vanish.
    pub tightness: f64,
    pub classification: EqualityClass,
    pub connected: bool,
    /// Every bound brackets the exact energy within tolerance.
    pub sound: bool,
}

fn relative_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

pub fn analyze(g: &Graph, opts: &AnalyzeOptions) -> Result<BoundReport> {
    let tol = &opts.tolerances;
    let summary = moment_summary(g)?;
    let spectrum = eigenvalues(g)?;
    let energy = spectrum.energy();
    let delta = summary.delta_max;

    let (triple, r, clamped, bound) = if delta == 0 {
        (None, None, false, 0.0)
    } else {
        let t = abc_triple(&summary)?;
        let opt = optimal_r(&t);
        let bound = theorem1_bound(&t);
        if cfg!(debug_assertions) && !opt.clamped {
            // same bound through the explicit dilated polynomial
            let p = dilate(&pr_coefficients(opt.r)?, delta as f64)?;
            let via_poly = bound_from_polynomial(&p, &summary, Direction::Above)?;
            let via_formula = bound_at_r(&t, opt.r)?;
            debug_assert!(
                relative_gap(via_poly, via_formula) < 1e-9,
                "{via_poly} vs {via_formula}"
            );
            debug_assert!(
                relative_gap(bound, via_formula) < 1e-9,
                "{bound} vs {via_formula}"
            );
        }
        (Some(t), Some(opt.r), opt.clamped, bound)
    };

    let van_dam = match g.is_regular() {
        Some(d) if d >= 1 && g.n() >= 2 => Some(van_dam_bound(g.n(), d)?),
        _ => None,
    };

    let (lp_upper, lp_lower) = match (opts.lp_degree, delta) {
        (None, _) => (None, None),
        (Some(_), 0) => (Some(0.0), Some(0.0)),
        (Some(degree), _) => {
            let up = solve_bound_lp(&LpProblem::for_graph(g, degree, Direction::Above)?)?;
            let low = solve_bound_lp(&LpProblem::for_graph(g, degree, Direction::Below)?)?;
            (Some(up.objective), Some(low.objective))
        }
    };

    let slack = energy.max(1.0);
    let sound = bound >= energy - tol.soundness * slack
        && lp_upper.is_none_or(|u| u >= energy - tol.lp_bracket * slack)
        && lp_lower.is_none_or(|l| l <= energy + tol.lp_bracket * slack);
    if !sound {
        log::error!(
            "bound violation for {}: energy {energy}, bound {bound}, lp {lp_lower:?}..{lp_upper:?}",
            g.label().unwrap_or("graph")
        );
    }

    let tightness = if energy > 0.0 {
        bound / energy
    } else if bound == 0.0 {
        1.0
    } else {
        f64::INFINITY
    };

    Ok(BoundReport {
        label: g.label().map(str::to_owned),
        classification: classify_with_spectrum(g, &spectrum, r.unwrap_or(0.0), energy, bound, tol),
        connected: g.is_connected(),
        summary,
        triple,
        optimal_r: r,
        r_clamped: clamped,
        energy,
        theorem1_bound: bound,
        van_dam_bound: van_dam,
        lp_upper,
        lp_lower,
        tightness,
        sound,
    })
}
