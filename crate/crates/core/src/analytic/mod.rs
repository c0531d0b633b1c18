//! Floating-point complex evaluation of the three kernel branches with
//! consistent labels, singularity classification, and the numeric
//! singularity-chain, bound, and radius checks.
//!
//! This is the only module that touches floating point; everything it
//! consumes (series coefficients, count sequences) arrives exact.

mod branches;
mod checks;
mod cubic;
mod survey;

pub use branches::{closed_form, ClosedFormTarget, BranchValues, EvalMethod, KernelBranches};
pub use checks::{
    dominant_root_check, gprime_bound_check, radius_estimate, singularity_chain_rec2, ChainReport,
    GPrimeBound, RadiusEstimate,
};
pub use cubic::{kernel_roots, kernel_roots_raw, residual, residual_tolerance};
pub use survey::{
    singularity_survey, slope_fit_at_xc, BranchCandidateReport, Classification, SingularFit,
};

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AnalyticError {
    #[error("point {0} lies on or within the guard band of a branch cut")]
    OnCut(Complex64),
    #[error("continuation path to {0} approaches a branch cut")]
    PathNearCut(Complex64),
    #[error("branch evaluation is undefined at x = 0 for this operation")]
    ZeroPoint,
    #[error("selection rule ambiguous: {0}")]
    AmbiguousSelection(String),
    #[error("sequence has {have} usable terms, need at least {need}")]
    TooFewTerms { have: usize, need: usize },
    #[error("continuation failed: {0}")]
    ContinuationFailed(String),
}

/// The critical abscissa, critical ordinate, and primitive cube root of
/// unity used throughout: `x_c = 4^{1/3}/3`, `y_c = 2^{1/3}/3`,
/// `j = exp(2πi/3)`.
#[derive(Clone, Copy, Debug)]
pub struct AnalyticConstants {
    pub x_c: f64,
    pub y_c: f64,
    pub j: Complex64,
}

impl AnalyticConstants {
    pub fn new() -> Self {
        AnalyticConstants {
            x_c: 4f64.cbrt() / 3.0,
            y_c: 2f64.cbrt() / 3.0,
            j: Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0),
        }
    }
}

impl Default for AnalyticConstants {
    fn default() -> Self {
        Self::new()
    }
}

/// Every tolerance used by the analytic module, in one place.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    /// Kernel residual bound, relative: `|y³−xy+x³| ≤ residual_rel·max(1,|x|³)`.
    pub residual_rel: f64,
    /// Relative tolerance for the root-sum and root-product invariants.
    pub invariant_rel: f64,
    /// Guard band around the four removed half-lines.
    pub cut_band: f64,
    /// Below this modulus branches are evaluated from the truncated series.
    pub series_radius: f64,
    /// Abscissa of the continuation base point on the positive real axis.
    pub base_point: f64,
    /// Truncation order of the series used near zero and at the base point.
    pub series_order: usize,
    /// Two roots closer than this trigger the critical-point collapse, which
    /// replaces the cluster by the exact double-root structure when that
    /// lowers the residual.
    pub snap_separation: f64,
    /// Offsets `10^{-2} .. 10^{-8}` of the square-root fitting ladder.
    pub fit_offset_hi: f64,
    pub fit_offset_lo: f64,
    /// Acceptable deviation of a fitted square-root exponent from 1/2.
    pub exponent_tol: f64,
    /// Modulus bound appearing in the chain argument.
    pub chain_modulus: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            residual_rel: 1e-10,
            invariant_rel: 1e-9,
            cut_band: 1e-6,
            series_radius: 0.02,
            base_point: 0.01,
            series_order: 44,
            snap_separation: 1e-6,
            fit_offset_hi: 1e-2,
            fit_offset_lo: 1e-8,
            exponent_tol: 0.01,
            chain_modulus: 1.33,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_satisfy_critical_relations() {
        let c = AnalyticConstants::new();
        assert!((3.0 * c.y_c * c.y_c - c.x_c).abs() < 1e-15);
        assert!((c.x_c.powi(3) + c.y_c.powi(3) - c.x_c * c.y_c).abs() < 1e-15);
        assert!((c.j.norm() - 1.0).abs() < 1e-15);
        assert!((c.j.powu(3) - Complex64::new(1.0, 0.0)).norm() < 1e-14);
    }
}
