//! Energy bounds from the tangent quartic family.
//!
//! For `0 < r < 1`, `P_r(x) = a x⁴ + b x² + c` is the unique even quartic with
//! `P_r(r) = r`, `P_r'(r) = 1` and `P_r(1) = 1`; it stays above `|x|` on
//! `[-1, 1]`. Dilating it to `[-Δ, Δ]` and summing over the spectrum gives
//! `E(G) <= a A + b B + c C` with `A = M4/Δ³`, `B = M2/Δ`, `C = Δn`.
//! Minimizing over `r` yields a closed form at `r* = √((B - A)/(C - B))`.

use crate::error::{Error, Result};
use crate::moments::{AbcTriple, MomentSummary};
use crate::polynomial::{verify_majorization_on, Direction, EvenPolynomial};

/// Grid size used when checking caller-supplied polynomials.
const CHECK_GRID: usize = 4096;
/// Where `r*` is clamped when the ratio `(B - A)/(C - B)` reaches 1.
pub const R_CLAMP_HIGH: f64 = 1.0 - 1e-9;

fn check_r(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(Error::DomainError(format!("r must lie in (0, 1), got {r}")))
    }
}

/// `(c, b, a)` for `P_r`, i.e. coefficients of `1, x², x⁴`.
fn tangent_quartic(r: f64) -> [f64; 3] {
    let denom = 2.0 * r * (r + 1.0) * (r + 1.0);
    [
        r * r * (2.0 * r + 1.0) / denom,
        (3.0 * r * r + 2.0 * r + 1.0) / denom,
        -1.0 / denom,
    ]
}

/// The unit-scale tangent quartic `P_r`.
pub fn pr_coefficients(r: f64) -> Result<EvenPolynomial> {
    check_r(r)?;
    EvenPolynomial::new(tangent_quartic(r).to_vec(), 1.0)
}

/// `x ↦ Δ·P(x/Δ)` for a unit-scale polynomial `P`.
pub fn dilate(p: &EvenPolynomial, delta: f64) -> Result<EvenPolynomial> {
    if p.scale() != 1.0 {
        return Err(Error::DomainError(format!(
            "dilation expects a unit-scale polynomial, got scale {}",
            p.scale()
        )));
    }
    if !(delta.is_finite() && delta > 0.0) {
        return Err(Error::DomainError(format!(
            "Δ must be positive, got {delta}"
        )));
    }
    let coefficients = p
        .coefficients()
        .iter()
        .enumerate()
        .map(|(j, c)| delta * c / delta.powi(2 * j as i32))
        .collect();
    EvenPolynomial::new(coefficients, delta)
}

/// Contracts a polynomial of degree at most 4 against `(M0, M2, M4)`.
///
/// Refuses to return a number unless the polynomial really stays on the
/// requested side of `|x|` over `[0, Δ]`.
pub fn bound_from_polynomial(
    p: &EvenPolynomial,
    s: &MomentSummary,
    direction: Direction,
) -> Result<f64> {
    if p.degree() > 4 {
        return Err(Error::DomainError(format!(
            "degree {} needs higher moments; use poly_opt",
            p.degree()
        )));
    }
    let delta = s.delta_max as f64;
    if delta > 0.0 {
        let check = verify_majorization_on(p, direction, delta, CHECK_GRID);
        if !check.ok {
            return Err(Error::MajorizationFailed {
                worst_gap: check.worst_gap,
                worst_x: check.worst_x,
            });
        }
    } else {
        // every eigenvalue is 0; only the constant term matters
        let c0 = p.coefficients().first().copied().unwrap_or(0.0);
        let ok = match direction {
            Direction::Above => c0 >= 0.0,
            Direction::Below => c0 <= 0.0,
        };
        if !ok {
            return Err(Error::MajorizationFailed {
                worst_gap: -c0.abs(),
                worst_x: 0.0,
            });
        }
    }
    Ok(p.contract(&[s.n as f64, s.m2 as f64, s.m4 as f64]))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalR {
    pub r: f64,
    /// The unconstrained minimizer was not an interior point of `(0, 1)`.
    pub clamped: bool,
}

/// The minimizer `r* = √((B - A)/(C - B))` of [`bound_at_r`].
///
/// Degenerate triples are clamped: `C = B` (a perfect matching, every
/// eigenvalue is `±Δ`) reports `r = 1`; `A = B` (spectrum inside `{0, ±Δ}`)
/// reports `r = 0`, where the bound tends to `B`; a ratio of 1 or more moves
/// `r` to [`R_CLAMP_HIGH`].
pub fn optimal_r(t: &AbcTriple) -> OptimalR {
    if t.c <= t.b {
        return OptimalR {
            r: 1.0,
            clamped: true,
        };
    }
    if t.b <= t.a {
        return OptimalR {
            r: 0.0,
            clamped: true,
        };
    }
    let ratio = (t.b - t.a) / (t.c - t.b);
    if ratio >= 1.0 {
        log::debug!("ratio (B - A)/(C - B) = {ratio} >= 1 for {t:?}; clamping r*");
        return OptimalR {
            r: R_CLAMP_HIGH,
            clamped: true,
        };
    }
    OptimalR {
        r: ratio.sqrt(),
        clamped: false,
    }
}

/// The quartic bound at a fixed tangency point `r`.
pub fn bound_at_r(t: &AbcTriple, r: f64) -> Result<f64> {
    check_r(r)?;
    let [c, b, a] = tangent_quartic(r);
    Ok(a * t.a + b * t.b + c * t.c)
}

/// The optimized quartic bound
/// `-(B² + B√(B-A)√(C-B) - C(A + √(B-A)√(C-B))) / (A - 2B + C)`.
pub fn theorem1_bound(t: &AbcTriple) -> f64 {
    let AbcTriple { a, b, c } = *t;
    if a == b && b == c {
        return b;
    }
    let denom = a - 2.0 * b + c;
    if denom.abs() < 1e-13 * c.abs() {
        let opt = optimal_r(t);
        return match opt.r {
            r if r > 0.0 && r < 1.0 => bound_at_r(t, r).expect("r in (0, 1)"),
            _ => b,
        };
    }
    let root = (b - a).max(0.0).sqrt() * (c - b).max(0.0).sqrt();
    -(b * b + b * root - c * (a + root)) / denom
}

/// `n (d + (d² - d)√(d - 1)) / (d² - d + 1)`, the bound for `d`-regular graphs.
pub fn van_dam_bound(n: usize, d: usize) -> Result<f64> {
    if d < 1 || n < 2 {
        return Err(Error::DomainError(format!(
            "van Dam bound needs d >= 1 and n >= 2, got n = {n}, d = {d}"
        )));
    }
    let (n, d) = (n as f64, d as f64);
    Ok(n * (d + (d * d - d) * (d - 1.0).sqrt()) / (d * d - d + 1.0))
}
