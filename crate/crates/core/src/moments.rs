//! Combinatorial second and fourth spectral moments.
//!
//! `M2 = 2m` and `M4 = 2Z - 2m + 8Q`, where `Z` is the first Zagreb index
//! and `Q` the number of 4-cycles. Every field here is an exact integer;
//! only the normalized [`AbcTriple`] is floating point.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{trace_moment, TRACE_MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    pub edges: u64,
    pub max_degree: usize,
    pub min_degree: usize,
    /// `Σ d_i²`
    pub zagreb: u64,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let degrees = g.degrees();
    let sum: u64 = degrees.iter().map(|&d| d as u64).sum();
    DegreeStats {
        edges: sum / 2,
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        zagreb: degrees.iter().map(|&d| (d as u64) * (d as u64)).sum(),
        degrees,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSummary {
    pub n: usize,
    pub m: u64,
    pub degrees: Vec<usize>,
    pub delta_max: usize,
    pub delta_min: usize,
    pub zagreb: u64,
    pub quad_count: u64,
    pub m2: u64,
    pub m4: u64,
}

/// 4-cycles counted through common neighbours: each cycle is seen once from
/// each of its two diagonals.
fn quadrilaterals_by_common_neighbours(g: &Graph) -> u64 {
    let n = g.n();
    let mut twice = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            let c = g.common_neighbors(i, j) as u64;
            twice += c * c.saturating_sub(1) / 2;
        }
    }
    twice / 2
}

struct QuadCount {
    q: u64,
    trace4: Option<u128>,
}

fn count_quadrilaterals_checked(g: &Graph, stats: &DegreeStats) -> Result<QuadCount> {
    let combinatorial = quadrilaterals_by_common_neighbours(g);
    if g.n() > TRACE_MAX_VERTICES {
        return Ok(QuadCount {
            q: combinatorial,
            trace4: None,
        });
    }
    let trace4 = trace_moment(g, 4)?;
    let numerator = trace4 as i128 - 2 * stats.zagreb as i128 + 2 * stats.edges as i128;
    if numerator < 0 || numerator % 8 != 0 || (numerator / 8) as u64 != combinatorial {
        return Err(Error::InternalMismatch(format!(
            "quadrilateral count: trace route gives ({trace4} - 2*{} + 2*{})/8, \
             common-neighbour route gives {combinatorial}",
            stats.zagreb, stats.edges
        )));
    }
    Ok(QuadCount {
        q: combinatorial,
        trace4: Some(trace4),
    })
}

/// Number of 4-cycles in `g`, each counted once.
///
/// Computed from `(Tr(A⁴) - 2Z + 2m) / 8` with the exact trace and again by
/// common-neighbour counting; the two must agree. Graphs above the trace
/// oracle's vertex cap use the combinatorial count alone.
pub fn count_quadrilaterals(g: &Graph) -> Result<u64> {
    Ok(count_quadrilaterals_checked(g, &degree_stats(g))?.q)
}

pub fn moment_summary(g: &Graph) -> Result<MomentSummary> {
    let stats = degree_stats(g);
    let QuadCount { q, trace4 } = count_quadrilaterals_checked(g, &stats)?;
    let m2 = 2 * stats.edges;
    let m4 = 2 * stats.zagreb - 2 * stats.edges + 8 * q;
    if let Some(trace4) = trace4 {
        let trace2 = trace_moment(g, 2)?;
        if trace2 != m2 as u128 || trace4 != m4 as u128 {
            return Err(Error::InternalMismatch(format!(
                "moments (M2, M4) = ({m2}, {m4}) disagree with traces ({trace2}, {trace4})"
            )));
        }
    }
    Ok(MomentSummary {
        n: g.n(),
        m: stats.edges,
        delta_max: stats.max_degree,
        delta_min: stats.min_degree,
        zagreb: stats.zagreb,
        quad_count: q,
        m2,
        m4,
        degrees: stats.degrees,
    })
}

/// The normalized moments `A = M4/Δ³`, `B = M2/Δ`, `C = Δn`, with
/// `0 <= A <= B <= C`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbcTriple {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl AbcTriple {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        AbcTriple { a, b, c }
    }
}

pub fn abc_triple(s: &MomentSummary) -> Result<AbcTriple> {
    let delta = s.delta_max as u128;
    if delta == 0 {
        return Err(Error::NoEdges);
    }
    let (m2, m4, n) = (s.m2 as u128, s.m4 as u128, s.n as u128);
    // A <= B  <=>  M4 <= M2 Δ²;  B <= C  <=>  M2 <= n Δ²
    if m4 > m2 * delta * delta || m2 > n * delta * delta {
        return Err(Error::InternalMismatch(format!(
            "ordering A <= B <= C fails for M2 = {m2}, M4 = {m4}, n = {n}, Δ = {delta}"
        )));
    }
    let d = delta as f64;
    Ok(AbcTriple {
        a: s.m4 as f64 / (d * d * d),
        b: s.m2 as f64 / d,
        c: d * s.n as f64,
    })
}
