//! Exact rational validation of a recurrence: either a ranking weight
//! `w ≥ 0` with `w·h ≤ −1` for every shift (evaluation terminates because
//! each dependency strictly lowers `w·n`), or a convex combination of the
//! shifts lying in the first orthant (so no such weight can exist).
//!
//! The weight is found by a phase-1 simplex with Bland's rule over exact
//! rationals; shift sets are tiny, so exactness costs nothing and removes
//! any chance of misclassifying a near-degenerate hull.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RecurrenceSpec;

/// Certificate that evaluation terminates: `w ≥ 0` and `w·h ≤ −1` for all
/// shifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankingWeight {
    pub weights: Vec<BigRational>,
}

/// Certificate that no ranking weight exists: `λ ≥ 0`, `Σλ = 1`, and
/// `Σ λ_h h ≥ 0` componentwise (one entry per shift, in spec order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfeasibilityWitness {
    pub lambda: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validation {
    Valid(RankingWeight),
    Invalid(InfeasibilityWitness),
}

/// Check a ranking weight against the spec by direct rational arithmetic.
pub fn check_ranking_weight(spec: &RecurrenceSpec, weight: &RankingWeight) -> bool {
    if weight.weights.len() != spec.dim() {
        return false;
    }
    if weight.weights.iter().any(|w| w.is_negative()) {
        return false;
    }
    let minus_one = -BigRational::one();
    spec.shifts().iter().all(|shift| {
        let dot: BigRational = shift
            .offsets
            .iter()
            .zip(&weight.weights)
            .map(|(&h, w)| w * BigRational::from_integer(h.into()))
            .sum();
        dot <= minus_one
    })
}

/// Check an infeasibility witness: convex combination weights whose shift
/// average lies in the first orthant.
pub fn check_witness(spec: &RecurrenceSpec, witness: &InfeasibilityWitness) -> bool {
    if witness.lambda.len() != spec.shifts().len() {
        return false;
    }
    if witness.lambda.iter().any(|l| l.is_negative()) {
        return false;
    }
    let total: BigRational = witness.lambda.iter().cloned().sum();
    if !total.is_one() {
        return false;
    }
    for coord in 0..spec.dim() {
        let combo: BigRational = spec
            .shifts()
            .iter()
            .zip(&witness.lambda)
            .map(|(shift, l)| l * BigRational::from_integer(shift.offsets[coord].into()))
            .sum();
        if combo.is_negative() {
            return false;
        }
    }
    true
}

/// Decide feasibility of `{w ≥ 0 : h·w ≤ −1 ∀h}` exactly. Both outcomes
/// carry a certificate that is re-checked before being returned.
pub fn validate(spec: &RecurrenceSpec) -> Validation {
    let d = spec.dim();
    let k = spec.shifts().len();
    // Phase-1 rows: (−h)·w − s_r + a_r = 1 with everything ≥ 0.
    // Columns: w (0..d), surplus (d..d+k), artificial (d+k..d+2k), then RHS.
    let cols = d + 2 * k;
    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(k);
    for (r, shift) in spec.shifts().iter().enumerate() {
        let mut row = vec![BigRational::zero(); cols + 1];
        for (j, &h) in shift.offsets.iter().enumerate() {
            row[j] = BigRational::from_integer((-h).into());
        }
        row[d + r] = -BigRational::one();
        row[d + k + r] = BigRational::one();
        row[cols] = BigRational::one();
        tableau.push(row);
    }
    let mut basis: Vec<usize> = (0..k).map(|r| d + k + r).collect();
    let cost = |j: usize| -> BigRational {
        if j >= d + k {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    };

    loop {
        // reduced costs: c_j − Σ_r c_{basis[r]} · T[r][j]
        let mut entering = None;
        for j in 0..cols {
            if basis.contains(&j) {
                continue;
            }
            let mut red = cost(j);
            for (r, row) in tableau.iter().enumerate() {
                if cost(basis[r]).is_one() {
                    red -= &row[j];
                }
            }
            if red.is_negative() {
                entering = Some(j); // Bland: first improving column
                break;
            }
        }
        let Some(e) = entering else { break };
        // ratio test; Bland tie-break on the smallest basic variable index
        let mut leaving: Option<(usize, BigRational)> = None;
        for (r, row) in tableau.iter().enumerate() {
            if row[e].is_positive() {
                let ratio = &row[cols] / &row[e];
                let better = match &leaving {
                    None => true,
                    Some((lr, lratio)) => {
                        ratio < *lratio || (ratio == *lratio && basis[r] < basis[*lr])
                    }
                };
                if better {
                    leaving = Some((r, ratio));
                }
            }
        }
        let (lr, _) = leaving.expect("phase-1 objective is bounded below by zero");
        pivot(&mut tableau, lr, e);
        basis[lr] = e;
    }

    // objective value = Σ over basic artificials of their RHS
    let objective: BigRational = basis
        .iter()
        .enumerate()
        .filter(|(_, &b)| b >= d + k)
        .map(|(r, _)| tableau[r][cols].clone())
        .sum();

    if objective.is_zero() {
        let mut weights = vec![BigRational::zero(); d];
        for (r, &b) in basis.iter().enumerate() {
            if b < d {
                weights[b] = tableau[r][cols].clone();
            }
        }
        let w = RankingWeight { weights };
        assert!(check_ranking_weight(spec, &w), "simplex produced an invalid weight");
        Validation::Valid(w)
    } else {
        // simplex multipliers: y_r = 1 − reduced cost of artificial column r
        let mut y = Vec::with_capacity(k);
        for r in 0..k {
            let col = d + k + r;
            let mut red = BigRational::one();
            for (rr, row) in tableau.iter().enumerate() {
                if cost(basis[rr]).is_one() {
                    red -= &row[col];
                }
            }
            y.push(BigRational::one() - red);
        }
        let total: BigRational = y.iter().cloned().sum();
        assert!(total.is_positive(), "infeasible phase-1 must have positive multipliers");
        let lambda = y.into_iter().map(|v| v / &total).collect();
        let witness = InfeasibilityWitness { lambda };
        assert!(check_witness(spec, &witness), "simplex produced an invalid witness");
        Validation::Invalid(witness)
    }
}

fn pivot(tableau: &mut [Vec<BigRational>], row: usize, col: usize) {
    let scale = tableau[row][col].clone();
    for v in tableau[row].iter_mut() {
        *v /= &scale;
    }
    let pivot_row = tableau[row].clone();
    for (r, other) in tableau.iter_mut().enumerate() {
        if r == row || other[col].is_zero() {
            continue;
        }
        let factor = other[col].clone();
        for (v, p) in other.iter_mut().zip(&pivot_row) {
            *v -= &factor * p;
        }
    }
}
