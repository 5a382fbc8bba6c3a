//! Even polynomials and checks that they stay above or below `|x|`.

use crate::error::{Error, Result};

/// Which side of `|x|` a polynomial must stay on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `P(x) >= |x|`, giving upper energy bounds.
    Above,
    /// `P(x) <= |x|`, giving lower energy bounds.
    Below,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Above => 1.0,
            Direction::Below => -1.0,
        }
    }
}

/// `c0 + c2 x² + c4 x⁴ + ...`; odd terms are not representable.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenPolynomial {
    coefficients: Vec<f64>,
    /// The interval half-width `Δ` this polynomial was built for.
    scale: f64,
}

impl EvenPolynomial {
    /// `coefficients[j]` multiplies `x^(2j)`.
    pub fn new(coefficients: Vec<f64>, scale: f64) -> Result<Self> {
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::DomainError(format!(
                "non-finite coefficient in {coefficients:?}"
            )));
        }
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::DomainError(format!(
                "scale must be positive, got {scale}"
            )));
        }
        Ok(EvenPolynomial {
            coefficients,
            scale,
        })
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Degree in `x`, ignoring trailing zero coefficients.
    pub fn degree(&self) -> usize {
        self.coefficients
            .iter()
            .rposition(|&c| c != 0.0)
            .map_or(0, |j| 2 * j)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let x2 = x * x;
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x2 + c)
    }

    pub fn derivative(&self, x: f64) -> f64 {
        let x2 = x * x;
        let inner = self
            .coefficients
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (j, &c)| acc * x2 + 2.0 * j as f64 * c);
        inner * x
    }

    /// `Σ c_{2j} M_{2j}` for moments `M0, M2, M4, ...`.
    pub fn contract(&self, even_moments: &[f64]) -> f64 {
        assert!(
            even_moments.len() >= self.coefficients.len(),
            "need {} moments, got {}",
            self.coefficients.len(),
            even_moments.len()
        );
        self.coefficients
            .iter()
            .zip(even_moments)
            .map(|(c, m)| c * m)
            .sum()
    }
}

/// Result of a majorization check: `worst_gap` is the smallest signed
/// distance to `|x|` found on the correct side (negative means violation).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Majorization {
    pub ok: bool,
    pub worst_gap: f64,
    pub worst_x: f64,
}

/// Real roots of `x³ + p x + q`.
pub(crate) fn depressed_cubic_roots(p: f64, q: f64) -> Vec<f64> {
    let disc = q * q / 4.0 + p * p * p / 27.0;
    let mut roots = if disc > 0.0 {
        let s = disc.sqrt();
        vec![(-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt()]
    } else if p == 0.0 {
        vec![(-q).cbrt()]
    } else {
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos())
            .collect()
    };
    for x in &mut roots {
        for _ in 0..3 {
            let f = *x * *x * *x + p * *x + q;
            let df = 3.0 * *x * *x + p;
            if df == 0.0 {
                break;
            }
            *x -= f / df;
        }
    }
    roots
}

/// Stationary points of `P(x) - x` in `(0, end)`.
fn stationary_points(p: &EvenPolynomial, end: f64, grid: &[f64]) -> Vec<f64> {
    let c = p.coefficients();
    let in_range = |x: &f64| *x > 0.0 && *x < end;
    match p.degree() {
        0 => vec![],
        2 => vec![1.0 / (2.0 * c[1])]
            .into_iter()
            .filter(in_range)
            .collect(),
        4 => {
            // 4 c4 x³ + 2 c2 x - 1 = 0
            depressed_cubic_roots(c[1] / (2.0 * c[2]), -1.0 / (4.0 * c[2]))
                .into_iter()
                .filter(in_range)
                .collect()
        }
        _ => {
            // bracket sign changes of the derivative and bisect
            let d = |x: f64| p.derivative(x) - 1.0;
            let mut out = Vec::new();
            for w in grid.windows(2) {
                let (mut lo, mut hi) = (w[0], w[1]);
                let (mut flo, fhi) = (d(lo), d(hi));
                if flo == 0.0 {
                    out.push(lo);
                    continue;
                }
                if flo.signum() == fhi.signum() {
                    continue;
                }
                for _ in 0..60 {
                    let mid = 0.5 * (lo + hi);
                    let fm = d(mid);
                    if fm.signum() == flo.signum() {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                out.push(0.5 * (lo + hi));
            }
            out.into_iter().filter(in_range).collect()
        }
    }
}

/// Checks `P` against `|x|` on `[0, end]` (evenness covers `[-end, 0]`).
///
/// A uniform grid of `grid_points` samples is combined with every
/// stationary point of `P(x) - x`, found in closed form up to degree 4 and by
/// bracketing otherwise, so tangency points are evaluated exactly.
pub fn verify_majorization_on(
    p: &EvenPolynomial,
    direction: Direction,
    end: f64,
    grid_points: usize,
) -> Majorization {
    let grid_points = grid_points.max(2);
    let grid: Vec<f64> = (0..grid_points)
        .map(|i| end * i as f64 / (grid_points - 1) as f64)
        .collect();
    let sign = direction.sign();
    let gap = |x: f64| sign * (p.eval(x) - x);

    let mut worst = Majorization {
        ok: true,
        worst_gap: f64::INFINITY,
        worst_x: 0.0,
    };
    for x in grid.iter().copied().chain(stationary_points(p, end, &grid)) {
        let g = gap(x);
        if g < worst.worst_gap {
            worst.worst_gap = g;
            worst.worst_x = x;
        }
    }
    worst.ok = worst.worst_gap >= -1e-9 * end.max(1e-300);
    worst
}

/// [`verify_majorization_on`] over the polynomial's own scale.
pub fn verify_majorization(
    p: &EvenPolynomial,
    direction: Direction,
    grid_points: usize,
) -> Majorization {
    verify_majorization_on(p, direction, p.scale(), grid_points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[f64], scale: f64) -> EvenPolynomial {
        EvenPolynomial::new(c.to_vec(), scale).unwrap()
    }

    #[test]
    fn evaluation() {
        let p = poly(&[1.0, -2.0, 0.5], 1.0);
        assert_eq!(p.eval(2.0), 1.0 - 8.0 + 8.0);
        assert_eq!(p.derivative(2.0), -8.0 + 16.0);
        assert_eq!(p.degree(), 4);
        assert_eq!(poly(&[3.0, 0.0, 0.0], 1.0).degree(), 0);
        assert_eq!(p.contract(&[10.0, 20.0, 40.0]), 10.0 - 40.0 + 20.0);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(EvenPolynomial::new(vec![f64::NAN], 1.0).is_err());
        assert!(EvenPolynomial::new(vec![1.0], 0.0).is_err());
    }

    #[test]
    fn cubic_roots() {
        // (x - 1)(x - 2)(x + 3) = x³ - 7x + 6
        let mut r = depressed_cubic_roots(-7.0, 6.0);
        r.sort_by(f64::total_cmp);
        for (a, e) in r.iter().zip([-3.0, 1.0, 2.0]) {
            assert!((a - e).abs() < 1e-12);
        }
        // x³ + x - 2 has the single real root 1
        let r = depressed_cubic_roots(1.0, -2.0);
        assert_eq!(r.len(), 1);
        assert!((r[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn square_is_below_identity() {
        let m = verify_majorization(&poly(&[0.0, 1.0, 0.0], 1.0), Direction::Above, 1000);
        assert!(!m.ok);
        assert!((m.worst_gap + 0.25).abs() < 1e-12);
        assert!((m.worst_x - 0.5).abs() < 1e-12);
    }

    #[test]
    fn zero_is_below() {
        for scale in [0.5, 1.0, 7.0] {
            let m = verify_majorization(&poly(&[0.0, 0.0, 0.0], scale), Direction::Below, 1000);
            assert!(m.ok);
            assert_eq!(m.worst_gap, 0.0);
        }
    }

    #[test]
    fn high_degree_stationary_points_are_found() {
        // 1/2 + x²/2 touches x at 1; the dip of (x⁸ + 1)/2 - x sits between grid nodes
        let p = poly(&[0.5, 0.0, 0.0, 0.0, 0.5], 1.0);
        let m = verify_majorization(&p, Direction::Above, 1000);
        let x_star = (0.25f64).powf(1.0 / 7.0);
        assert!(!m.ok);
        assert!((m.worst_x - x_star).abs() < 1e-9);
    }
}
