//! Classification of each branch at each candidate singularity, and
//! square-root fits at the critical abscissa.

use num_complex::Complex64;

use super::branches::KernelBranches;
use super::{AnalyticError, Tolerances};
use crate::series::KernelBranch;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Singular,
    Regular,
    Inconclusive,
}

/// Square-root local model `f(x) ≈ limit ± slope·(dist)^exponent`:
/// `limit` is the branch value at the location, `slope` the modulus of the
/// leading coefficient, `exponent` the fitted power of the distance.
#[derive(Clone, Copy, Debug)]
pub struct SingularFit {
    pub location: Complex64,
    pub limit: Complex64,
    pub slope: f64,
    pub exponent: f64,
}

#[derive(Clone, Debug)]
pub struct BranchCandidateReport {
    pub candidate: Complex64,
    pub branch: KernelBranch,
    pub classification: Classification,
    /// Growth exponent of `|f′|` against the distance, per approach
    /// direction (`≈ −1/2` at a square-root singularity, `≥ 0` at a regular
    /// point).
    pub derivative_exponents: [f64; 2],
    /// Square-root fit of the value itself, for singular classifications.
    pub fit: Option<SingularFit>,
}

fn branch_index(branch: KernelBranch) -> usize {
    match branch {
        KernelBranch::Xi0 => 0,
        KernelBranch::Xi1 => 1,
        KernelBranch::Xi2 => 2,
    }
}

/// Implicit derivative `dy/dx = (y − 3x²) / (3y² − x)` on the curve.
fn branch_derivative(x: Complex64, y: Complex64) -> Complex64 {
    (y - 3.0 * x * x) / (3.0 * y * y - x)
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    num / den
}

/// Points approaching `candidate` at distance `d` from inside the domain,
/// rotated by `angle` off the inward radial direction (or off the positive
/// real axis when the candidate is the origin).
fn approach_point(candidate: Complex64, d: f64, angle: f64) -> Complex64 {
    let rot = Complex64::from_polar(1.0, angle);
    if candidate.norm() == 0.0 {
        d * rot
    } else {
        candidate * (Complex64::new(1.0, 0.0) - (d / candidate.norm()) * rot)
    }
}

fn classify_direction(
    ctx: &KernelBranches,
    candidate: Complex64,
    branch: usize,
    angle: f64,
) -> Result<f64, AnalyticError> {
    // derivative growth over a short ladder well outside the snap zone
    let mut logs_d = Vec::new();
    let mut logs_f = Vec::new();
    for k in 0..=8 {
        let d = 1e-2 * 10f64.powf(-0.5 * k as f64); // 1e-2 .. 1e-6
        let x = approach_point(candidate, d, angle);
        let vals = ctx.eval(x)?;
        let deriv = branch_derivative(x, vals.values[branch]);
        logs_d.push(d.ln());
        logs_f.push(deriv.norm().max(1e-300).ln());
    }
    Ok(least_squares_slope(&logs_d, &logs_f))
}

fn classify_exponent(slope: f64) -> Classification {
    if slope <= -0.3 {
        Classification::Singular
    } else if slope >= -0.1 {
        Classification::Regular
    } else {
        Classification::Inconclusive
    }
}

/// Value-based square-root fit along the radial approach: exponent from a
/// log-log regression over the offset ladder, slope from the smallest
/// offsets where the subleading corrections are negligible.
fn sqrt_fit(
    ctx: &KernelBranches,
    candidate: Complex64,
    branch: usize,
) -> Result<SingularFit, AnalyticError> {
    let limit = ctx.eval(candidate)?.values[branch];
    let tol = ctx.tolerances();
    let mut ds = Vec::new();
    let mut logs_d = Vec::new();
    let mut logs_v = Vec::new();
    let mut d = tol.fit_offset_hi;
    while d >= tol.fit_offset_lo * 0.999 {
        let x = approach_point(candidate, d, 0.0);
        let value = ctx.eval(x)?.values[branch];
        ds.push(((value - limit).norm(), d));
        logs_d.push(d.ln());
        logs_v.push((value - limit).norm().max(1e-300).ln());
        d /= 10.0;
    }
    let exponent = least_squares_slope(&logs_d, &logs_v);
    // slope estimate from the two finest offsets
    let k = ds.len();
    let slope = (ds[k - 1].0 / ds[k - 1].1.sqrt() + ds[k - 2].0 / ds[k - 2].1.sqrt()) / 2.0;
    Ok(SingularFit {
        location: candidate,
        limit,
        slope,
        exponent,
    })
}

/// Classify every branch at every candidate (`0, x_c, j·x_c, j²·x_c`) by
/// derivative growth along two approach directions; singular entries carry
/// a square-root fit of the value. Disagreeing directions are reported as
/// inconclusive, never silently resolved.
pub fn singularity_survey(tol: &Tolerances) -> Result<Vec<BranchCandidateReport>, AnalyticError> {
    let ctx = KernelBranches::new(*tol);
    let c = *ctx.constants();
    let candidates = [
        Complex64::new(0.0, 0.0),
        Complex64::new(c.x_c, 0.0),
        c.j * c.x_c,
        c.j * c.j * c.x_c,
    ];
    let mut out = Vec::with_capacity(12);
    for candidate in candidates {
        for branch in [KernelBranch::Xi0, KernelBranch::Xi1, KernelBranch::Xi2] {
            let idx = branch_index(branch);
            let angles = if candidate.norm() == 0.0 {
                [std::f64::consts::FRAC_PI_4, std::f64::consts::FRAC_PI_2]
            } else {
                [0.0, std::f64::consts::FRAC_PI_6]
            };
            let e0 = classify_direction(&ctx, candidate, idx, angles[0])?;
            let e1 = classify_direction(&ctx, candidate, idx, angles[1])?;
            let c0 = classify_exponent(e0);
            let c1 = classify_exponent(e1);
            let classification = if c0 == c1 { c0 } else { Classification::Inconclusive };
            let fit = if classification == Classification::Singular {
                Some(sqrt_fit(&ctx, candidate, idx)?)
            } else {
                None
            };
            out.push(BranchCandidateReport {
                candidate,
                branch,
                classification,
                derivative_exponents: [e0, e1],
                fit,
            });
        }
    }
    Ok(out)
}

/// The fit of `ξ₀` (or `ξ₁`) at the critical abscissa, whose slope is the
/// benchmark `1/√3`.
pub fn slope_fit_at_xc(tol: &Tolerances, branch: KernelBranch) -> Result<SingularFit, AnalyticError> {
    assert!(
        matches!(branch, KernelBranch::Xi0 | KernelBranch::Xi1),
        "only the colliding branches are singular at x_c"
    );
    let ctx = KernelBranches::new(*tol);
    let c = *ctx.constants();
    sqrt_fit(&ctx, Complex64::new(c.x_c, 0.0), branch_index(branch))
}
