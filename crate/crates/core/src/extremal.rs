//! Graphs attaining the quartic bound.
//!
//! Equality holds exactly when every eigenvalue lies in `{±r*Δ, ±Δ}`. For
//! connected graphs on at least two vertices these are the complete graphs,
//! the strongly regular graphs with `λ = μ`, and the incidence graphs of
//! symmetric 2-designs.

use std::fmt;

use crate::error::Result;
use crate::graph::Graph;
use crate::moments::AbcTriple;
use crate::quartic::optimal_r;
use crate::spectral::{eigenvalues, Spectrum};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DesignParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityTag {
    Complete,
    SrgEqualParams(SrgParams),
    DesignIncidence(DesignParams),
    NotTight,
    /// Tight, but outside the three families. Expected only for disconnected
    /// graphs or fewer than two vertices.
    TightUnclassified,
}

impl fmt::Display for EqualityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EqualityTag::Complete => f.write_str("Complete"),
            EqualityTag::SrgEqualParams(p) => {
                write!(f, "SrgEqualParams({},{},{},{})", p.v, p.k, p.lambda, p.mu)
            }
            EqualityTag::DesignIncidence(p) => {
                write!(f, "DesignIncidence({},{},{})", p.v, p.k, p.lambda)
            }
            EqualityTag::NotTight => f.write_str("NotTight"),
            EqualityTag::TightUnclassified => f.write_str("TightUnclassified"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EqualityClass {
    pub tag: EqualityTag,
    /// Spectrum contained in `{±r*Δ, ±Δ}`.
    pub spectrum_ok: bool,
}

/// True iff every eigenvalue is within `tol * Δ` of `±r Δ` or `±Δ`.
pub fn spectrum_within(spectrum: &Spectrum, r: f64, delta: f64, tol: f64) -> bool {
    let targets = [delta, r * delta];
    let eps = tol * delta.max(1.0);
    spectrum
        .eigenvalues
        .iter()
        .all(|x| targets.iter().any(|t| (x.abs() - t).abs() <= eps))
}

/// Whether the spectrum of `g` lies in `{±r*Δ, ±Δ}` for the `r*` of `t`.
pub fn spectrum_membership(g: &Graph, t: &AbcTriple) -> Result<bool> {
    let spectrum = eigenvalues(g)?;
    Ok(spectrum_within(
        &spectrum,
        optimal_r(t).r,
        g.max_degree() as f64,
        Tolerances::default().membership,
    ))
}

pub fn detect_complete(g: &Graph) -> bool {
    let n = g.n();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

/// Strongly regular parameters by exhaustive pair check. Requires at least
/// one adjacent and one non-adjacent pair so that both `λ` and `μ` are
/// defined. O(n² · n/64).
pub fn detect_srg(g: &Graph) -> Option<SrgParams> {
    let k = g.is_regular()?;
    let n = g.n();
    let (mut lambda, mut mu) = (None, None);
    for i in 0..n {
        for j in i + 1..n {
            let c = g.common_neighbors(i, j);
            let slot = if g.has_edge(i, j) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return None,
                Some(_) => {}
            }
        }
    }
    Some(SrgParams {
        v: n,
        k,
        lambda: lambda?,
        mu: mu?,
    })
}

/// Parameters `(v, k, λ)` when `g` is the incidence graph of a symmetric
/// 2-design: bipartite with parts of equal size `v`, `k`-regular, and any two
/// vertices on the same side sharing exactly `λ` neighbours.
pub fn detect_design_incidence(g: &Graph) -> Option<DesignParams> {
    let sides = g.bipartition()?;
    let k = g.is_regular()?;
    if k == 0 {
        return None;
    }
    let v = sides.iter().filter(|&&s| s).count();
    if 2 * v != g.n() {
        return None;
    }
    let mut lambda = None;
    for side in [false, true] {
        let members: Vec<usize> = (0..g.n()).filter(|&i| sides[i] == side).collect();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                let c = g.common_neighbors(i, j);
                match lambda {
                    None => lambda = Some(c),
                    Some(prev) if prev != c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    // a single point and block: every pair condition is vacuous
    Some(DesignParams {
        v,
        k,
        lambda: lambda.unwrap_or(0),
    })
}

/// Distinct eigenvalues and multiplicities of an SRG: `k` once, then
/// `θ, τ = ((λ-μ) ± √((λ-μ)² + 4(k-μ)))/2` with multiplicities
/// `((v-1) ∓ (2k + (v-1)(λ-μ))/√D)/2`.
pub fn srg_spectrum(p: SrgParams) -> [(f64, f64); 3] {
    let (v, k, l, m) = (p.v as f64, p.k as f64, p.lambda as f64, p.mu as f64);
    let disc = ((l - m) * (l - m) + 4.0 * (k - m)).sqrt();
    let skew = (2.0 * k + (v - 1.0) * (l - m)) / disc;
    [
        (k, 1.0),
        (((l - m) + disc) / 2.0, ((v - 1.0) - skew) / 2.0),
        (((l - m) - disc) / 2.0, ((v - 1.0) + skew) / 2.0),
    ]
}

/// `±k` once each and `±√(k-λ)` with multiplicity `v-1` each.
pub fn design_spectrum(p: DesignParams) -> [(f64, f64); 4] {
    let root = (p.k as f64 - p.lambda as f64).sqrt();
    let mult = p.v as f64 - 1.0;
    [
        (p.k as f64, 1.0),
        (root, mult),
        (-root, mult),
        (-(p.k as f64), 1.0),
    ]
}

/// Classifies a graph given its spectrum, `r*` and the two sides of the
/// inequality. Detectors run in the order complete, design incidence, SRG.
pub fn classify_with_spectrum(
    g: &Graph,
    spectrum: &Spectrum,
    r_star: f64,
    energy: f64,
    bound: f64,
    tol: &Tolerances,
) -> EqualityClass {
    let spectrum_ok = spectrum_within(spectrum, r_star, g.max_degree() as f64, tol.membership);
    let tag = if (bound - energy).abs() > tol.tightness * energy.max(1.0) {
        EqualityTag::NotTight
    } else if g.n() < 2 || !g.is_connected() {
        EqualityTag::TightUnclassified
    } else if detect_complete(g) {
        EqualityTag::Complete
    } else if let Some(p) = detect_design_incidence(g) {
        EqualityTag::DesignIncidence(p)
    } else if let Some(p) = detect_srg(g).filter(|p| p.lambda == p.mu) {
        EqualityTag::SrgEqualParams(p)
    } else {
        log::warn!(
            "connected graph on {} vertices attains the bound ({bound} vs energy {energy}) \
             but matches no known family",
            g.n()
        );
        EqualityTag::TightUnclassified
    };
    EqualityClass { tag, spectrum_ok }
}

/// Equality classification of `g` against a computed bound.
pub fn classify_equality(
    g: &Graph,
    t: &AbcTriple,
    energy: f64,
    bound: f64,
) -> Result<EqualityClass> {
    let spectrum = eigenvalues(g)?;
    Ok(classify_with_spectrum(
        g,
        &spectrum,
        optimal_r(t).r,
        energy,
        bound,
        &Tolerances::default(),
    ))
}
