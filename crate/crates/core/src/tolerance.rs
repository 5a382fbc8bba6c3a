/// Numerical thresholds used when comparing bounds against exact energies.
///
/// All values are relative to `max(1, energy)` or to `Δ` as noted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// A bound below `energy - soundness * max(1, energy)` is a violation.
    pub soundness: f64,
    /// `|bound - energy| <= tightness * max(1, energy)` counts as equality.
    pub tightness: f64,
    /// Eigenvalue-to-target distance, relative to `Δ`, for spectrum membership.
    pub membership: f64,
    /// Slack allowed when LP bounds are checked against the exact energy.
    pub lp_bracket: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            soundness: 1e-7,
            tightness: 1e-6,
            membership: 1e-7,
            lp_bracket: 1e-6,
        }
    }
}

impl Tolerances {
    /// Every threshold multiplied by `factor`.
    pub fn scaled(self, factor: f64) -> Self {
        Tolerances {
            soundness: self.soundness * factor,
            tightness: self.tightness * factor,
            membership: self.membership * factor,
            lp_bracket: self.lp_bracket * factor,
        }
    }
}
