//! Adjacency spectra, graph energy and exact trace moments.
//!
//! Eigenvalues come from cyclic Jacobi rotations on the dense adjacency
//! matrix. The trace moments `Tr(A^k)` are counted with exact integer
//! arithmetic and never touch floating point, so they can referee both the
//! eigensolver and the combinatorial moment formulas.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Sweep cap for the Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;
/// Largest power accepted by [`trace_moment`].
pub const TRACE_MAX_POWER: u32 = 16;
/// Largest vertex count accepted by [`trace_moment`].
pub const TRACE_MAX_VERTICES: usize = 2048;

/// Eigenvalues of a graph's adjacency matrix, sorted in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Off-diagonal Frobenius norm left when the iteration stopped.
    pub residual: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `Σ |λ_i|`.
    pub fn energy(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x.abs()).sum()
    }

    /// `Σ λ_i^k`.
    pub fn moment(&self, k: u32) -> f64 {
        self.eigenvalues.iter().map(|x| x.powi(k as i32)).sum()
    }

    /// Groups eigenvalues closer than `tol` to their neighbour into
    /// `(mean, multiplicity)` pairs. Presentation only.
    pub fn distinct(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut last = f64::NAN;
        for &x in &self.eigenvalues {
            match groups.last_mut() {
                Some((sum, count)) if (last - x).abs() <= tol => {
                    *sum += x;
                    *count += 1;
                }
                _ => groups.push((x, 1)),
            }
            last = x;
        }
        groups.into_iter().map(|(s, c)| (s / c as f64, c)).collect()
    }
}

/// Eigenvalue accuracy target for a graph of maximum degree `max_degree`.
pub fn eigen_tolerance(max_degree: usize) -> f64 {
    1e-10 * (max_degree.max(1) as f64)
}

/// Adjacency eigenvalues of `g`.
pub fn eigenvalues(g: &Graph) -> Result<Spectrum> {
    let n = g.n();
    let scale = g.max_degree().max(1) as f64;
    let mut a = g.adjacency_matrix();
    let (values, residual) = jacobi_eigenvalues(&mut a, n, 1e-12 * n as f64 * scale, MAX_SWEEPS)?;
    let mut eigenvalues = values;
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum {
        eigenvalues,
        residual,
    })
}

/// Graph energy `Σ |λ_i|`.
pub fn energy(g: &Graph) -> Result<f64> {
    Ok(eigenvalues(g)?.energy())
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * sum).sqrt()
}

/// Cyclic Jacobi on the dense symmetric `n x n` matrix `a` (row-major,
/// overwritten). Returns the unsorted diagonal and the final residual.
pub fn jacobi_eigenvalues(
    a: &mut [f64],
    n: usize,
    tolerance: f64,
    max_sweeps: usize,
) -> Result<(Vec<f64>, f64)> {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    let mut residual = off_diagonal_norm(a, n);
    let mut sweeps = 0;
    while residual > tolerance {
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence { sweeps, residual });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
            }
        }
        sweeps += 1;
        residual = off_diagonal_norm(a, n);
    }
    Ok(((0..n).map(|i| a[i * n + i]).collect(), residual))
}

fn overflow(k: u32) -> Error {
    Error::CapExceeded(format!(
        "closed-walk count of length {k} overflows 128 bits"
    ))
}

/// Exact `Tr(A^k)`, the number of closed walks of length `k`.
///
/// For each start vertex the rows of `A^⌊k/2⌋` and `A^⌈k/2⌉` are propagated
/// along adjacency lists and dotted, using `A` symmetric.
pub fn trace_moment(g: &Graph, k: u32) -> Result<u128> {
    let n = g.n();
    if k > TRACE_MAX_POWER {
        return Err(Error::CapExceeded(format!(
            "power {k} exceeds {TRACE_MAX_POWER}"
        )));
    }
    if n > TRACE_MAX_VERTICES {
        return Err(Error::CapExceeded(format!(
            "{n} vertices exceed {TRACE_MAX_VERTICES}"
        )));
    }
    if k == 0 {
        return Ok(n as u128);
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|i| g.neighbors(i).collect()).collect();
    let half = k / 2;

    let step = |row: &[u128], out: &mut Vec<u128>| -> Result<()> {
        out.clear();
        out.resize(n, 0);
        for (j, nbrs) in adj.iter().enumerate() {
            let mut acc: u128 = 0;
            for &l in nbrs {
                acc = acc.checked_add(row[l]).ok_or_else(|| overflow(k))?;
            }
            out[j] = acc;
        }
        Ok(())
    };

    let mut total: u128 = 0;
    let mut low = vec![0u128; n];
    let mut scratch = Vec::with_capacity(n);
    let mut high = Vec::with_capacity(n);
    for i in 0..n {
        low.fill(0);
        low[i] = 1;
        for _ in 0..half {
            step(&low, &mut scratch)?;
            std::mem::swap(&mut low, &mut scratch);
        }
        let high_row: &[u128] = if k % 2 == 1 {
            step(&low, &mut high)?;
            &high
        } else {
            &low
        };
        for (x, y) in low.iter().zip(high_row) {
            let term = x.checked_mul(*y).ok_or_else(|| overflow(k))?;
            total = total.checked_add(term).ok_or_else(|| overflow(k))?;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, FamilySpec};

    fn gen(s: &str) -> Graph {
        generate(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn assert_spectrum(actual: &Spectrum, expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.eigenvalues.iter().zip(expected) {
            assert!(
                (a - e).abs() <= tol,
                "{:?} vs {:?}",
                actual.eigenvalues,
                expected
            );
        }
    }

    #[test]
    fn triangle_spectrum() {
        assert_spectrum(
            &eigenvalues(&gen("complete:3")).unwrap(),
            &[2.0, -1.0, -1.0],
            1e-10,
        );
    }

    #[test]
    fn c4_spectrum() {
        assert_spectrum(
            &eigenvalues(&gen("cycle:4")).unwrap(),
            &[2.0, 0.0, 0.0, -2.0],
            2e-10,
        );
    }

    #[test]
    fn heawood_spectrum() {
        let r2 = 2f64.sqrt();
        let mut expected = vec![3.0];
        expected.extend([r2; 6]);
        expected.extend([-r2; 6]);
        expected.push(-3.0);
        let s = eigenvalues(&gen("heawood")).unwrap();
        assert_spectrum(&s, &expected, 3e-10);
        assert!((s.energy() - (6.0 + 12.0 * r2)).abs() < 1e-9);
    }

    #[test]
    fn petersen_energy() {
        let s = eigenvalues(&gen("petersen")).unwrap();
        assert_eq!(
            s.distinct(1e-8)
                .iter()
                .map(|&(v, c)| (v.round() as i64, c))
                .collect::<Vec<_>>(),
            vec![(3, 1), (1, 5), (-2, 4)]
        );
        assert!((s.energy() - 16.0).abs() < 1e-9);
    }

    #[test]
    fn complete_energy() {
        for n in 1..12 {
            let e = energy(&gen(&format!("complete:{n}"))).unwrap();
            assert!((e - 2.0 * (n as f64 - 1.0)).abs() < 1e-9, "K{n}: {e}");
        }
    }

    #[test]
    fn empty_graphs() {
        assert!(eigenvalues(&Graph::empty(0)).unwrap().is_empty());
        assert_eq!(energy(&Graph::empty(5)).unwrap(), 0.0);
    }

    #[test]
    fn trace_small_powers() {
        let g = gen("petersen");
        assert_eq!(trace_moment(&g, 0).unwrap(), 10);
        assert_eq!(trace_moment(&g, 1).unwrap(), 0);
        assert_eq!(trace_moment(&g, 2).unwrap(), 30);
        assert_eq!(trace_moment(&gen("cycle:4"), 4).unwrap(), 32);
        // K4: 3^k + 3(-1)^k
        let k4 = gen("complete:4");
        for k in 0..=16u32 {
            let expected = 3i128.pow(k) + 3 * (-1i128).pow(k);
            assert_eq!(trace_moment(&k4, k).unwrap() as i128, expected, "k = {k}");
        }
    }

    #[test]
    fn c4_closed_walks_by_enumeration() {
        let g = gen("cycle:4");
        let mut count = 0;
        for a in 0..4 {
            for b in g.neighbors(a) {
                for c in g.neighbors(b) {
                    for d in g.neighbors(c) {
                        if g.has_edge(d, a) {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(count, 32);
    }

    #[test]
    fn trace_caps() {
        let g = gen("complete:3");
        assert!(matches!(trace_moment(&g, 17), Err(Error::CapExceeded(_))));
        assert!(matches!(
            trace_moment(&Graph::empty(TRACE_MAX_VERTICES + 1), 2),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn jacobi_reports_non_convergence() {
        let mut a = vec![2.0, 1.0, 1.0, 2.0];
        let err = jacobi_eigenvalues(&mut a, 2, 1e-12, 0).unwrap_err();
        assert!(matches!(err, Error::NoConvergence { sweeps: 0, .. }));
    }
}
