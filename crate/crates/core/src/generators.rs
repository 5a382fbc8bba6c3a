//! Deterministic graph families.
//!
//! Every family is addressable by a short spec string, e.g. `complete:5`,
//! `rook:4`, `gnp:12:0.3:42` or `union:complete:2,complete:2`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// `K_{1,k}`: vertex 0 is the centre.
    Star(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    /// Incidence graph of the Fano plane, built as `ProjectivePlaneIncidence(2)`.
    Heawood,
    /// Line graph of `K_{s,s}`: cells of an `s x s` grid, adjacent when they
    /// share a row or a column.
    Rook(usize),
    /// Point/line incidence graph of `PG(2, q)` for prime `q`.
    ProjectivePlaneIncidence(u64),
    /// Erdős–Rényi `G(n, p)` driven by `ChaCha8Rng::seed_from_u64(seed)`.
    RandomGnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    DisjointUnion(Vec<FamilySpec>),
}

/// Builds the graph described by `spec`. The result carries the spec string
/// as its label.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let g = build(spec)?;
    Ok(g.with_label(spec.to_string()))
}

fn unsupported(msg: String) -> Error {
    Error::UnsupportedParameter(msg)
}

fn build(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match *spec {
        Complete(n) => {
            if n < 1 {
                return Err(unsupported("complete graph needs n >= 1".into()));
            }
            Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        Cycle(n) => {
            if n < 3 {
                return Err(unsupported(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Path(n) => {
            if n < 1 {
                return Err(unsupported("path needs n >= 1".into()));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Star(k) => {
            if k < 1 {
                return Err(unsupported("star needs k >= 1".into()));
            }
            Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
        }
        CompleteBipartite(p, q) => {
            if p < 1 || q < 1 {
                return Err(unsupported(format!("K_{{{p},{q}}} needs both sides >= 1")));
            }
            Graph::from_edges(p + q, (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))))
        }
        Petersen => Graph::from_edges(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]),
        ),
        Heawood => projective_plane_incidence(2),
        Rook(s) => {
            if s < 2 {
                return Err(unsupported(format!("rook graph needs s >= 2, got {s}")));
            }
            let mut g = Graph::empty(s * s);
            for a in 0..s * s {
                for b in a + 1..s * s {
                    if a / s == b / s || a % s == b % s {
                        g.add_edge(a, b);
                    }
                }
            }
            Ok(g)
        }
        ProjectivePlaneIncidence(q) => projective_plane_incidence(q),
        RandomGnp { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(unsupported(format!("edge probability {p} outside [0, 1]")));
            }
            Ok(random_gnp(n, p, seed))
        }
        DisjointUnion(ref parts) => parts.iter().try_fold(Graph::empty(0), |acc, part| {
            Ok(acc.disjoint_union(&build(part)?))
        }),
    }
}

/// Pairs are visited in graph6 column order (`j` ascending, then `i < j`) and
/// each draws one `f64` in `[0, 1)`; the edge is present when the draw is
/// below `p`.
fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen::<f64>() < p {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn is_prime(q: u64) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// Normalized homogeneous coordinates of `PG(2, q)`: first nonzero entry is 1.
fn projective_points(q: u64) -> Vec<[u64; 3]> {
    let mut pts = Vec::with_capacity((q * q + q + 1) as usize);
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for b in 0..q {
        pts.push([0, 1, b]);
    }
    pts.push([0, 0, 1]);
    pts
}

fn projective_plane_incidence(q: u64) -> Result<Graph> {
    if !is_prime(q) {
        return Err(unsupported(format!("PG(2, q) requires prime q, got {q}")));
    }
    let pts = projective_points(q);
    let v = pts.len();
    let mut g = Graph::empty(2 * v);
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0 {
                g.add_edge(i, v + j);
            }
        }
    }
    Ok(g)
}

/// Hand-written Heawood graph: a 14-cycle with chords `(i, i + 5)` from every
/// even vertex. Kept as an independent fixture for the projective-plane
/// construction.
pub fn heawood_fixture() -> Graph {
    Graph::from_edges(
        14,
        (0..14)
            .map(|i| (i, (i + 1) % 14))
            .chain((0..14).step_by(2).map(|i| (i, (i + 5) % 14))),
    )
    .expect("static edge list")
}

/// `count` seeded `G(n, p)` specs cycling through `n` in `4..=24` and
/// `p` in `{0.2, 0.5, 0.8}`; seeds are `base_seed + index`.
pub fn seeded_gnp_corpus(count: usize, base_seed: u64) -> Vec<FamilySpec> {
    const PS: [f64; 3] = [0.2, 0.5, 0.8];
    (0..count)
        .map(|i| FamilySpec::RandomGnp {
            n: 4 + i % 21,
            p: PS[(i / 21) % 3],
            seed: base_seed + i as u64,
        })
        .collect()
}

/// One small member of every named family.
pub fn named_families() -> Vec<FamilySpec> {
    use FamilySpec::*;
    vec![
        Complete(2),
        Complete(5),
        Cycle(4),
        Cycle(5),
        Cycle(6),
        Path(4),
        Star(4),
        CompleteBipartite(2, 3),
        CompleteBipartite(3, 3),
        Petersen,
        Heawood,
        Rook(3),
        Rook(4),
        ProjectivePlaneIncidence(3),
        DisjointUnion(vec![Complete(2), Complete(2)]),
        DisjointUnion(vec![Cycle(5), Complete(3)]),
    ]
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Complete(n) => write!(f, "complete:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Path(n) => write!(f, "path:{n}"),
            Star(k) => write!(f, "star:{k}"),
            CompleteBipartite(p, q) => write!(f, "bipartite:{p}:{q}"),
            Petersen => f.write_str("petersen"),
            Heawood => f.write_str("heawood"),
            Rook(s) => write!(f, "rook:{s}"),
            ProjectivePlaneIncidence(q) => write!(f, "pg:{q}"),
            RandomGnp { n, p, seed } => write!(f, "gnp:{n}:{p}:{seed}"),
            DisjointUnion(parts) => {
                f.write_str("union:")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{part}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("union:") {
            let parts = rest
                .split(',')
                .map(|p| {
                    let part: FamilySpec = p.parse()?;
                    if matches!(part, FamilySpec::DisjointUnion(_)) {
                        return Err(unsupported("nested unions are not supported".into()));
                    }
                    Ok(part)
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(FamilySpec::DisjointUnion(parts));
        }

        let fields: Vec<&str> = s.split(':').collect();
        let bad = || unsupported(format!("cannot parse family spec {s:?}"));
        let int = |t: &str| t.parse::<usize>().map_err(|_| bad());
        use FamilySpec::*;
        Ok(match fields[..] {
            ["complete", n] => Complete(int(n)?),
            ["cycle", n] => Cycle(int(n)?),
            ["path", n] => Path(int(n)?),
            ["star", k] => Star(int(k)?),
            ["bipartite" | "complete_bipartite", p, q] => CompleteBipartite(int(p)?, int(q)?),
            ["petersen"] => Petersen,
            ["heawood"] => Heawood,
            ["rook", s] => Rook(int(s)?),
            ["pg" | "projective", q] => ProjectivePlaneIncidence(q.parse().map_err(|_| bad())?),
            ["gnp", n, p, seed] => RandomGnp {
                n: int(n)?,
                p: p.parse().map_err(|_| bad())?,
                seed: seed.parse().map_err(|_| bad())?,
            },
            _ => return Err(bad()),
        })
    }
}
