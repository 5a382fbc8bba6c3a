//! Graph energy and spectral-moment energy bounds.
//!
//! The energy of a graph is the sum of the absolute values of its adjacency
//! eigenvalues. This crate computes it exactly and bounds it from the
//! second and fourth spectral moments `M2 = 2m` and `M4 = 2Z - 2m + 8Q`
//! through an optimized tangent quartic, with a linear-programming
//! generalization to arbitrary even degree.
//!
//! ```
//! use graph_energy::{analyze, generate, AnalyzeOptions, FamilySpec};
//!
//! let g = generate(&FamilySpec::Heawood).unwrap();
//! let report = analyze(&g, &AnalyzeOptions::default()).unwrap();
//! assert!((report.theorem1_bound - report.energy).abs() < 1e-9);
//! ```

pub mod edge_list;
pub mod error;
pub mod extremal;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod moments;
pub mod poly_opt;
pub mod polynomial;
pub mod quartic;
pub mod report;
pub mod simplex;
pub mod spectral;
pub mod tolerance;

pub use edge_list::{parse_edge_list, write_edge_list};
pub use error::{Error, Result};
pub use extremal::{
    classify_equality, detect_complete, detect_design_incidence, detect_srg, spectrum_membership,
    DesignParams, EqualityClass, EqualityTag, SrgParams,
};
pub use generators::{generate, FamilySpec};
pub use graph::{EdgeList, Graph};
pub use graph6::{parse_graph6, write_graph6};
pub use moments::{
    abc_triple, count_quadrilaterals, degree_stats, moment_summary, AbcTriple, MomentSummary,
};
pub use poly_opt::{bound_sweep, solve_bound_lp, LpProblem, LpSolution, LpStatus, SweepRow};
pub use polynomial::{verify_majorization, Direction, EvenPolynomial, Majorization};
pub use quartic::{
    bound_at_r, bound_from_polynomial, dilate, optimal_r, pr_coefficients, theorem1_bound,
    van_dam_bound, OptimalR,
};
pub use report::{analyze, AnalyzeOptions, BoundReport};
pub use spectral::{eigenvalues, energy, trace_moment, Spectrum};
pub use tolerance::Tolerances;
