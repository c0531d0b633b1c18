//! Label-free numeric checks: the dominant-root lemma, the derivative bound
//! at the critical ordinate, the singularity chain of the 2-D recurrence,
//! and root-test radius estimation.

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::Zero;

use super::cubic::kernel_roots;
use super::{AnalyticConstants, AnalyticError, Tolerances};
use crate::numeric::{big_ln, binomial};

/// True iff some root of `y³ − xy + x³ = 0` has modulus strictly larger
/// than `|x|`. Undefined at the origin.
pub fn dominant_root_check(x: Complex64, tol: &Tolerances) -> Result<bool, AnalyticError> {
    if x.norm() == 0.0 {
        return Err(AnalyticError::ZeroPoint);
    }
    let roots = kernel_roots(x, tol);
    Ok(roots.iter().any(|y| y.norm() > x.norm()))
}

/// Result of the derivative-bound comparison at `y_c`: the majorant series
/// for `G′(y_c)` against `2x_c²y_c`.
#[derive(Clone, Copy, Debug)]
pub struct GPrimeBound {
    /// Value of `3 Σ_{i≥1} (i+1) C(3i−2, i−1) y_c^{3i+2}`.
    pub bound_value: f64,
    /// The published threshold the sum must stay below.
    pub threshold: f64,
    /// `2 x_c² y_c`, which must exceed the sum for the square-root
    /// coefficient to be nonzero.
    pub comparison_value: f64,
    pub passes: bool,
}

/// Evaluate the majorant sum to convergence (terms below `1e−15`) and
/// compare with `2x_c²y_c`. Passes when the sum is below `0.16` and the
/// comparison value lies in `[0.23, 0.24]`.
pub fn gprime_bound_check() -> GPrimeBound {
    let c = AnalyticConstants::new();
    let mut sum = 0.0f64;
    let mut i = 1u64;
    loop {
        let binom = to_f64(&binomial(3 * i - 2, i - 1));
        let term = 3.0 * (i + 1) as f64 * binom * c.y_c.powi(3 * i as i32 + 2);
        sum += term;
        if term < 1e-15 {
            break;
        }
        i += 1;
        assert!(i < 10_000, "majorant series failed to converge");
    }
    let comparison = 2.0 * c.x_c * c.x_c * c.y_c;
    GPrimeBound {
        bound_value: sum,
        threshold: 0.16,
        comparison_value: comparison,
        passes: sum < 0.16 && (0.23..=0.24).contains(&comparison),
    }
}

fn to_f64(v: &BigUint) -> f64 {
    big_ln(v).exp()
}

/// The singularity chain of the 2-D knight-shift recurrence together with
/// the full root multiset at its second point.
#[derive(Clone, Debug)]
pub struct ChainReport {
    /// `x₀ = x_c`, `x₁ = −2y_c`, `x₂ ≈ −0.26−1.02i`, `x₃ ≈ 0.92−1.02i`.
    pub points: [Complex64; 4],
    /// Roots at `x₁`; one of them must be `x₀` again.
    pub roots_at_x1: [Complex64; 3],
}

/// Walk the singularity chain: start at the radius of convergence, take the
/// dominant root, then the non-real root in the lower half-plane, then the
/// root of modulus above the bound `1.33`. Each selection must be
/// numerically unambiguous.
pub fn singularity_chain_rec2(tol: &Tolerances) -> Result<ChainReport, AnalyticError> {
    let c = AnalyticConstants::new();
    let x0 = Complex64::new(c.x_c, 0.0);

    // x₁: the root at x₀ of largest modulus, with a clear margin
    let roots0 = kernel_roots(x0, tol);
    let mut by_modulus = roots0;
    by_modulus.sort_by(|a, b| b.norm().total_cmp(&a.norm()));
    if by_modulus[0].norm() < 1.5 * by_modulus[1].norm() {
        return Err(AnalyticError::AmbiguousSelection(format!(
            "largest-modulus root at x0 not separated: {by_modulus:?}"
        )));
    }
    let x1 = by_modulus[0];

    // the multiset at x₁ must contain x₀
    let roots1 = kernel_roots(x1, tol);
    if !roots1.iter().any(|r| (r - x0).norm() < 1e-6) {
        return Err(AnalyticError::AmbiguousSelection(format!(
            "roots at x1 do not contain x0: {roots1:?}"
        )));
    }
    // x₂: the non-real root with negative imaginary part
    let non_real: Vec<Complex64> = roots1.iter().copied().filter(|r| r.im.abs() > 1e-6).collect();
    if non_real.len() != 2 {
        return Err(AnalyticError::AmbiguousSelection(format!(
            "expected a conjugate pair at x1, got {roots1:?}"
        )));
    }
    let x2 = *non_real
        .iter()
        .find(|r| r.im < 0.0)
        .ok_or_else(|| AnalyticError::AmbiguousSelection("no lower half-plane root at x1".into()))?;

    // x₃: the unique root at x₂ of modulus above the chain bound
    let roots2 = kernel_roots(x2, tol);
    let big: Vec<Complex64> = roots2
        .iter()
        .copied()
        .filter(|r| r.norm() > tol.chain_modulus)
        .collect();
    if big.len() != 1 {
        return Err(AnalyticError::AmbiguousSelection(format!(
            "expected one root beyond modulus {}, got {roots2:?}",
            tol.chain_modulus
        )));
    }
    let x3 = big[0];

    Ok(ChainReport {
        points: [x0, x1, x2, x3],
        roots_at_x1: roots1,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct RadiusEstimate {
    pub estimate: f64,
    pub index_used: usize,
}

/// Root-test estimate of the radius of convergence from a coefficient
/// sequence: `g_m^{−1/m}` at the largest nonzero index that is a multiple
/// of `stride`. Requires at least ten nonzero terms on that grid.
pub fn radius_estimate(seq: &[BigUint], stride: usize) -> Result<RadiusEstimate, AnalyticError> {
    assert!(stride >= 1, "stride must be positive");
    let nonzero: Vec<usize> = (0..seq.len())
        .step_by(stride)
        .filter(|&m| m > 0 && !seq[m].is_zero())
        .collect();
    if nonzero.len() < 10 {
        return Err(AnalyticError::TooFewTerms {
            have: nonzero.len(),
            need: 10,
        });
    }
    let m = *nonzero.last().unwrap();
    let estimate = (-big_ln(&seq[m]) / m as f64).exp();
    Ok(RadiusEstimate {
        estimate,
        index_used: m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn dominant_root_at_critical_point() {
        let tol = Tolerances::default();
        let c = AnalyticConstants::new();
        assert!(dominant_root_check(Complex64::new(c.x_c, 0.0), &tol).unwrap());
        assert!(matches!(
            dominant_root_check(Complex64::new(0.0, 0.0), &tol),
            Err(AnalyticError::ZeroPoint)
        ));
    }

    #[test]
    fn dominant_root_at_one_is_the_real_root() {
        // y³ − y + 1 has a real root near −1.3247
        let tol = Tolerances::default();
        let x = Complex64::new(1.0, 0.0);
        let roots = kernel_roots(x, &tol);
        let real = roots.iter().find(|r| r.im.abs() < 1e-9).unwrap();
        assert!((real.re + 1.324_717_957_244_746).abs() < 1e-9);
        assert!(dominant_root_check(x, &tol).unwrap());
    }

    #[test]
    fn gprime_bound_matches_published_numbers() {
        let report = gprime_bound_check();
        assert!(report.passes);
        assert!(report.bound_value < 0.16);
        assert!((report.comparison_value - 0.2352).abs() < 1e-3);
        // first term of the sum: 6·y_c⁵
        let c = AnalyticConstants::new();
        assert!(report.bound_value > 6.0 * c.y_c.powi(5));
    }

    #[test]
    fn chain_reaches_the_published_points() {
        let tol = Tolerances::default();
        let report = singularity_chain_rec2(&tol).unwrap();
        let c = AnalyticConstants::new();
        let [x0, x1, x2, x3] = report.points;
        assert!((x0.re - c.x_c).abs() < 1e-12);
        assert!((x1 - Complex64::new(-2.0 * c.y_c, 0.0)).norm() < 1e-9);
        assert!((x2.re + 0.26).abs() < 5e-3 && (x2.im + 1.02).abs() < 5e-3);
        assert!((x3.re - 0.92).abs() < 5e-3 && (x3.im + 1.02).abs() < 5e-3);
        assert!(x3.norm() > tol.chain_modulus);
        assert!(report
            .roots_at_x1
            .iter()
            .any(|r| (r - x0).norm() < 1e-9));
    }

    #[test]
    fn radius_estimate_on_geometric_sequence() {
        // 4^m has radius 1/4 exactly
        let seq: Vec<BigUint> = (0..40u32).map(|m| BigUint::from(4u32).pow(m)).collect();
        let est = radius_estimate(&seq, 1).unwrap();
        assert_eq!(est.index_used, 39);
        assert!((est.estimate - 0.25).abs() < 1e-6);
    }

    #[test]
    fn radius_estimate_needs_enough_terms() {
        let seq: Vec<BigUint> = (0..8u32).map(|m| BigUint::from(2u32).pow(m)).collect();
        assert!(matches!(
            radius_estimate(&seq, 1),
            Err(AnalyticError::TooFewTerms { have: 7, need: 10 })
        ));
    }
}
