//! Labeled evaluation of the three kernel branches on the cut plane.
//!
//! Labels are fixed by the series near the origin and transported by
//! analytic continuation along straight segments from a small positive base
//! point. The domain is the plane minus four half-lines: the negative real
//! axis from 0 and the three outward rays from the critical abscissas
//! `x_c`, `j·x_c`, `j²·x_c` (the paper leaves the cut directions to the
//! implementation; these radial cuts are the documented choice).

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::cubic::{kernel_roots, residual, residual_tolerance};
use super::{AnalyticConstants, AnalyticError, Tolerances};
use crate::series::{psi_series, xi_series};

/// How a value was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalMethod {
    SeriesNearZero,
    PathContinuation,
    ClosedForm,
}

/// The three branch values at one point, indexed `ξ₀, ξ₁, ξ₂`.
#[derive(Clone, Copy, Debug)]
pub struct BranchValues {
    pub at: Complex64,
    pub values: [Complex64; 3],
    pub method: EvalMethod,
}

struct Cut {
    base: Complex64,
    dir: Complex64, // unit vector
}

impl Cut {
    fn distance(&self, p: Complex64) -> f64 {
        // distance from p to the ray {base + t·dir : t ≥ 0}
        let rel = p - self.base;
        let t = (rel.re * self.dir.re + rel.im * self.dir.im).max(0.0);
        (rel - t * self.dir).norm()
    }
}

/// Branch evaluator: carries the tolerances, the truncated series for the
/// near-zero disk, and the cut geometry.
pub struct KernelBranches {
    tol: Tolerances,
    consts: AnalyticConstants,
    xi_coeffs: Vec<f64>,
    psi_coeffs: Vec<f64>,
    cuts: Vec<Cut>,
}

fn to_f64_coeffs(series: &crate::series::USeries) -> Vec<f64> {
    series
        .coeffs()
        .iter()
        .map(|c| {
            let n = c.numer().to_f64().unwrap_or(f64::NAN);
            let d = c.denom().to_f64().unwrap_or(f64::NAN);
            n / d
        })
        .collect()
}

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

impl KernelBranches {
    pub fn new(tol: Tolerances) -> Self {
        let consts = AnalyticConstants::new();
        let order = tol.series_order;
        let cuts = vec![
            Cut {
                base: Complex64::new(0.0, 0.0),
                dir: Complex64::new(-1.0, 0.0),
            },
            Cut {
                base: Complex64::new(consts.x_c, 0.0),
                dir: Complex64::new(1.0, 0.0),
            },
            Cut {
                base: consts.j * consts.x_c,
                dir: consts.j,
            },
            Cut {
                base: consts.j * consts.j * consts.x_c,
                dir: consts.j * consts.j,
            },
        ];
        KernelBranches {
            tol,
            consts,
            xi_coeffs: to_f64_coeffs(&xi_series(order)),
            psi_coeffs: to_f64_coeffs(&psi_series(order)),
            cuts,
        }
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    pub fn constants(&self) -> &AnalyticConstants {
        &self.consts
    }

    /// Truncated-series values `(ξ₀, ξ₁, ξ₂)`; accurate for `|x|` well inside
    /// the disk of convergence, with the principal `√x`.
    pub fn series_values(&self, x: Complex64) -> [Complex64; 3] {
        let xi = horner(&self.xi_coeffs, x);
        let psi = horner(&self.psi_coeffs, x);
        let sqrt_x = x.sqrt();
        [
            xi,
            sqrt_x * psi - 0.5 * xi,
            -sqrt_x * psi - 0.5 * xi,
        ]
    }

    /// Distance from a point to the nearest cut.
    pub fn cut_distance(&self, p: Complex64) -> f64 {
        self.cuts.iter().map(|c| c.distance(p)).fold(f64::INFINITY, f64::min)
    }

    fn nearest_cut_base_distance(&self, p: Complex64) -> f64 {
        self.cuts
            .iter()
            .map(|c| (p - c.base).norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// Labeled branch values at `x`. Points inside the series disk are read
    /// off the expansions; elsewhere labels are transported along the
    /// straight segment from the base point. Points on a cut are rejected,
    /// except the four cut base points themselves, where the branches extend
    /// continuously (two of them colliding).
    pub fn eval(&self, x: Complex64) -> Result<BranchValues, AnalyticError> {
        let at_candidate = self.nearest_cut_base_distance(x) <= self.tol.cut_band;
        if !at_candidate && self.cut_distance(x) <= self.tol.cut_band {
            return Err(AnalyticError::OnCut(x));
        }
        if x.norm() <= self.tol.series_radius && !at_candidate {
            let values = self.series_values(x);
            self.validate(x, &values)?;
            return Ok(BranchValues {
                at: x,
                values,
                method: EvalMethod::SeriesNearZero,
            });
        }
        let values = self.continue_to(x)?;
        self.validate(x, &values)?;
        Ok(BranchValues {
            at: x,
            values,
            method: EvalMethod::PathContinuation,
        })
    }

    fn validate(&self, x: Complex64, values: &[Complex64; 3]) -> Result<(), AnalyticError> {
        let scale = x.norm().max(1.0);
        let rtol = residual_tolerance(x, &self.tol);
        for &y in values {
            if residual(x, y) > rtol {
                return Err(AnalyticError::ContinuationFailed(format!(
                    "residual {} exceeds {rtol} at {x}",
                    residual(x, y)
                )));
            }
        }
        let sum: Complex64 = values.iter().sum();
        if sum.norm() > self.tol.invariant_rel * scale {
            return Err(AnalyticError::ContinuationFailed(format!(
                "branch sum {sum} not zero at {x}"
            )));
        }
        let prod = values[0] * values[1] * values[2] + x * x * x;
        if prod.norm() > self.tol.invariant_rel * scale.powi(3) {
            return Err(AnalyticError::ContinuationFailed(format!(
                "branch product off by {prod} at {x}"
            )));
        }
        Ok(())
    }

    fn segment_respects_cuts(&self, from: Complex64, to: Complex64) -> bool {
        // sample the segment against every cut; near the far end allow the
        // approach to a cut base point (continuous limit evaluation)
        let samples = 256;
        let allow_terminal = self.nearest_cut_base_distance(to) <= self.tol.cut_band;
        for k in 0..=samples {
            let t = k as f64 / samples as f64;
            let p = from + (to - from) * t;
            if allow_terminal && (p - to).norm() <= 16.0 * self.tol.cut_band {
                continue;
            }
            if self.cut_distance(p) <= self.tol.cut_band {
                return false;
            }
        }
        true
    }

    fn continue_to(&self, target: Complex64) -> Result<[Complex64; 3], AnalyticError> {
        let base = Complex64::new(self.tol.base_point, 0.0);
        if !self.segment_respects_cuts(base, target) {
            return Err(AnalyticError::PathNearCut(target));
        }
        // label the base point from the series, aligned to the cubic roots
        let series = self.series_values(base);
        let base_roots = kernel_roots(base, &self.tol);
        let perm = best_assignment(&series, &base_roots)
            .ok_or_else(|| AnalyticError::ContinuationFailed("base labeling ambiguous".into()))?;
        let mut current = [
            base_roots[perm[0]],
            base_roots[perm[1]],
            base_roots[perm[2]],
        ];
        let mut t = 0.0f64;
        let mut dt = 1.0 / 32.0;
        let mut stalls = 0usize;
        while t < 1.0 {
            let trial = (t + dt).min(1.0);
            let point = base + (target - base) * trial;
            let roots = kernel_roots(point, &self.tol);
            match transport(&current, &roots) {
                Some(next) => {
                    current = next;
                    t = trial;
                    dt = (dt * 1.5).min(1.0 / 16.0);
                    stalls = 0;
                }
                None => {
                    dt *= 0.5;
                    stalls += 1;
                    if stalls > 200 || dt < 1e-14 {
                        return Err(AnalyticError::ContinuationFailed(format!(
                            "no unambiguous matching near t={t} toward {target}"
                        )));
                    }
                }
            }
        }
        Ok(current)
    }
}

/// Permutation matching `from[i] → to[perm[i]]` minimizing total distance.
/// Ambiguity is judged by the caller.
fn best_assignment(from: &[Complex64; 3], to: &[Complex64; 3]) -> Option<[usize; 3]> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut best = None;
    let mut best_cost = f64::INFINITY;
    for perm in PERMS {
        let cost: f64 = (0..3).map(|i| (from[i] - to[perm[i]]).norm()).sum();
        if cost < best_cost {
            best_cost = cost;
            best = Some(perm);
        }
    }
    best
}

/// Transport labels one step: match old values to new roots, requiring each
/// move to be visibly smaller than the alternative unless the competing
/// roots have themselves merged (save at a collision target, where either
/// assignment yields the same value).
fn transport(current: &[Complex64; 3], roots: &[Complex64; 3]) -> Option<[Complex64; 3]> {
    let perm = best_assignment(current, roots)?;
    for i in 0..3 {
        let chosen = roots[perm[i]];
        let moved = (current[i] - chosen).norm();
        let mut second = f64::INFINITY;
        let mut merge_gap = f64::INFINITY;
        for (j, &other) in roots.iter().enumerate() {
            if j == perm[i] {
                continue;
            }
            let d = (current[i] - other).norm();
            if d < second {
                second = d;
                merge_gap = (chosen - other).norm();
            }
        }
        if moved < 0.45 * second {
            continue;
        }
        if merge_gap < 1e-7 * chosen.norm().max(1.0) {
            continue; // ambiguity between coincident roots is harmless
        }
        return None;
    }
    Some([roots[perm[0]], roots[perm[1]], roots[perm[2]]])
}

/// Closed trigonometric forms with principal branches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormTarget {
    /// `ξ(x) = 2√(x/3)·sin(arcsin((3x)^{3/2}/2)/3)`.
    Xi,
    /// `ψ(x) = cos(arcsin((3x)^{3/2}/2)/3)`.
    Psi,
}

pub fn closed_form(target: ClosedFormTarget, x: Complex64) -> Complex64 {
    let three_x = 3.0 * x;
    let arg = three_x.sqrt().powu(3) / 2.0;
    let theta = arg.asin() / 3.0;
    match target {
        ClosedFormTarget::Xi => 2.0 * (x / 3.0).sqrt() * theta.sin(),
        ClosedFormTarget::Psi => theta.cos(),
    }
}
