//! Exact big-integer dynamic programming for walk counts in the quadrant and
//! the right half-plane, plus the derived axis, diagonal, and length
//! sequences.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::stepset::StepSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GridError {
    #[error("start point ({0}, {1}) lies outside the requested region")]
    StartOutsideRegion(i64, i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Quadrant,
    RightHalfPlane,
}

impl Region {
    fn contains(self, i: i64, j: i64) -> bool {
        match self {
            Region::Quadrant => i >= 0 && j >= 0,
            Region::RightHalfPlane => i >= 0,
        }
    }
}

/// Walk counts indexed by endpoint and length. Layer `n` maps endpoints to
/// the number of length-`n` walks from `start` confined to `region`; absent
/// cells are zero. Immutable once built.
#[derive(Clone, Debug)]
pub struct CountGrid {
    start: (i64, i64),
    region: Region,
    n_max: usize,
    layers: Vec<BTreeMap<(i64, i64), BigUint>>,
}

fn build(steps: &StepSet, start: (i64, i64), region: Region, n_max: usize) -> CountGrid {
    let mut layers = Vec::with_capacity(n_max + 1);
    let mut first = BTreeMap::new();
    first.insert(start, BigUint::from(1u32));
    layers.push(first);
    for n in 1..=n_max {
        let mut layer: BTreeMap<(i64, i64), BigUint> = BTreeMap::new();
        for (&(i, j), c) in &layers[n - 1] {
            for &(dx, dy) in steps.steps() {
                let (a, b) = (i + dx, j + dy);
                if region.contains(a, b) {
                    *layer.entry((a, b)).or_insert_with(BigUint::zero) += c;
                }
            }
        }
        layers.push(layer);
    }
    CountGrid {
        start,
        region,
        n_max,
        layers,
    }
}

/// Count walks confined to the first quadrant, for all lengths up to `n_max`.
pub fn count_quadrant(
    steps: &StepSet,
    start: (i64, i64),
    n_max: usize,
) -> Result<CountGrid, GridError> {
    if !Region::Quadrant.contains(start.0, start.1) {
        return Err(GridError::StartOutsideRegion(start.0, start.1));
    }
    Ok(build(steps, start, Region::Quadrant, n_max))
}

/// Count walks confined to the right half-plane `x ≥ 0`; the ordinate is
/// unrestricted within the reachable band.
pub fn count_half_plane(
    steps: &StepSet,
    start: (i64, i64),
    n_max: usize,
) -> Result<CountGrid, GridError> {
    if !Region::RightHalfPlane.contains(start.0, start.1) {
        return Err(GridError::StartOutsideRegion(start.0, start.1));
    }
    Ok(build(steps, start, Region::RightHalfPlane, n_max))
}

impl CountGrid {
    pub fn start(&self) -> (i64, i64) {
        self.start
    }

    pub fn region(&self) -> Region {
        self.region
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Number of length-`n` walks ending at `(i, j)`; zero when absent.
    pub fn count(&self, i: i64, j: i64, n: usize) -> BigUint {
        self.layers
            .get(n)
            .and_then(|layer| layer.get(&(i, j)))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn layer(&self, n: usize) -> &BTreeMap<(i64, i64), BigUint> {
        &self.layers[n]
    }

    /// Counts summed over all computed lengths, keyed by endpoint.
    pub fn aggregated(&self) -> BTreeMap<(i64, i64), BigUint> {
        let mut total: BTreeMap<(i64, i64), BigUint> = BTreeMap::new();
        for layer in &self.layers {
            for (&cell, c) in layer {
                *total.entry(cell).or_insert_with(BigUint::zero) += c;
            }
        }
        total
    }

    /// Total count at `(i, j)` over all computed lengths.
    pub fn aggregated_at(&self, i: i64, j: i64) -> BigUint {
        let mut total = BigUint::zero();
        for layer in &self.layers {
            if let Some(c) = layer.get(&(i, j)) {
                total += c;
            }
        }
        total
    }

    /// Coefficients `g_m` of the bottom-row generating function
    /// `x³·Σ_i Q_{i,0} x^i`, so `g_{i+3}` is the aggregated count at `(i, 0)`.
    pub fn axis_sequence(&self) -> Vec<BigUint> {
        let agg = self.aggregated();
        let max_i = agg
            .keys()
            .filter(|&&(_, j)| j == 0)
            .map(|&(i, _)| i)
            .max()
            .unwrap_or(-1);
        let mut g = vec![BigUint::zero(); (max_i.max(-1) + 4) as usize];
        for (&(i, j), c) in &agg {
            if j == 0 {
                g[(i + 3) as usize] = c.clone();
            }
        }
        g
    }

    /// Aggregated counts on the main diagonal, indexed by `n` for `(n, n)`.
    pub fn diagonal_sequence(&self) -> Vec<BigUint> {
        let agg = self.aggregated();
        let max_n = agg
            .keys()
            .filter(|&&(i, j)| i == j && i >= 0)
            .map(|&(i, _)| i)
            .max()
            .unwrap_or(0);
        (0..=max_n)
            .map(|n| agg.get(&(n, n)).cloned().unwrap_or_else(BigUint::zero))
            .collect()
    }

    /// `a(n)`: the number of walks of each length, all endpoints combined.
    pub fn length_sequence(&self) -> Vec<BigUint> {
        self.layers
            .iter()
            .map(|layer| layer.values().fold(BigUint::zero(), |acc, c| acc + c))
            .collect()
    }
}

/// Counts of a 1-D walk on the half-line `x ≥ 0` carrying a Laurent
/// polynomial in an auxiliary variable that tracks the ordinate. Entry `k`
/// of `coeffs` is the number of walks whose ordinate totals `min_exp + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentCounts {
    pub min_exp: i64,
    pub coeffs: Vec<BigUint>,
}

impl LaurentCounts {
    fn unit(exp: i64) -> Self {
        LaurentCounts {
            min_exp: exp,
            coeffs: vec![BigUint::from(1u32)],
        }
    }

    fn add_shifted(&mut self, other: &LaurentCounts, shift: i64) {
        let lo = self.min_exp.min(other.min_exp + shift);
        let hi = (self.min_exp + self.coeffs.len() as i64)
            .max(other.min_exp + shift + other.coeffs.len() as i64);
        let mut coeffs = vec![BigUint::zero(); (hi - lo) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_exp - lo) as usize + k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.min_exp + shift - lo) as usize + k] += c;
        }
        self.min_exp = lo;
        self.coeffs = coeffs;
    }

    /// Coefficient at exponent `e` (zero outside the stored band).
    pub fn coeff(&self, e: i64) -> BigUint {
        let idx = e - self.min_exp;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigUint::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Sum of all coefficients (the auxiliary variable set to 1).
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().fold(BigUint::zero(), |acc, c| acc + c)
    }
}

/// Project the walk problem onto the x-axis: a 1-D half-line walk in which
/// each horizontal displacement `h` carries the weight `Σ_{(h,k)} y^k` over
/// the steps with that displacement. Layer `n` maps each abscissa to the
/// accumulated weight of the length-`n` projected walks. This is a separate
/// engine from [`count_half_plane`] and serves as its cross-check.
pub fn half_line_weighted_counts(
    steps: &StepSet,
    start: (i64, i64),
    n_max: usize,
) -> Result<Vec<BTreeMap<i64, LaurentCounts>>, GridError> {
    if start.0 < 0 {
        return Err(GridError::StartOutsideRegion(start.0, start.1));
    }
    // weight of displacement h = list of ordinate shifts k with (h,k) a step
    let mut weights: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &(dx, dy) in steps.steps() {
        weights.entry(dx).or_default().push(dy);
    }
    let mut layers: Vec<BTreeMap<i64, LaurentCounts>> = Vec::with_capacity(n_max + 1);
    let mut first = BTreeMap::new();
    first.insert(start.0, LaurentCounts::unit(start.1));
    layers.push(first);
    for n in 1..=n_max {
        let mut layer: BTreeMap<i64, LaurentCounts> = BTreeMap::new();
        for (&i, poly) in &layers[n - 1] {
            for (&h, shifts) in &weights {
                let target = i + h;
                if target < 0 {
                    continue;
                }
                for &k in shifts {
                    layer
                        .entry(target)
                        .or_insert_with(|| LaurentCounts {
                            min_exp: 0,
                            coeffs: Vec::new(),
                        })
                        .add_shifted(poly, k);
                }
            }
        }
        // drop all-zero placeholder entries
        layer.retain(|_, p| p.coeffs.iter().any(|c| !c.is_zero()));
        layers.push(layer);
    }
    Ok(layers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::binomial;

    #[test]
    fn knight_table_spot_values() {
        let grid = count_quadrant(&StepSet::knight(), (1, 1), 16).unwrap();
        assert_eq!(grid.aggregated_at(8, 8), BigUint::from(1440u32));
        assert_eq!(grid.aggregated_at(9, 0), BigUint::from(6u32));
        assert_eq!(grid.aggregated_at(12, 0), BigUint::from(24u32));
    }

    #[test]
    fn knight_axis_sequence_matches_bottom_row() {
        let grid = count_quadrant(&StepSet::knight(), (1, 1), 16).unwrap();
        let g = grid.axis_sequence();
        assert_eq!(g[6], BigUint::from(1u32));
        assert_eq!(g[9], BigUint::from(2u32));
        assert_eq!(g[12], BigUint::from(6u32));
        assert_eq!(g[15], BigUint::from(24u32));
        for (m, c) in g.iter().enumerate() {
            if m % 3 != 0 || m < 6 {
                assert!(c.is_zero(), "unexpected axis coefficient at {m}");
            }
        }
    }

    #[test]
    fn knight_axis_bound_holds() {
        let grid = count_quadrant(&StepSet::knight(), (1, 1), 60).unwrap();
        let agg = grid.aggregated();
        for (&(i, j), c) in &agg {
            if j == 0 && i >= 3 {
                assert_eq!(i % 3, 0);
                let bound = binomial(3 * (i as u64 / 3) - 2, i as u64 / 3 - 1);
                assert!(c <= &bound, "axis count exceeds binomial bound at i={i}");
            }
        }
    }

    #[test]
    fn knight_diagonal_sequence() {
        let grid = count_quadrant(&StepSet::knight(), (1, 1), 14).unwrap();
        let d = grid.diagonal_sequence();
        let expect: [u32; 9] = [0, 1, 2, 4, 12, 36, 120, 408, 1440];
        for (n, v) in expect.iter().enumerate() {
            assert_eq!(d[n], BigUint::from(*v), "diagonal mismatch at n={n}");
        }
    }

    #[test]
    fn knight_endpoint_determines_length() {
        let grid = count_quadrant(&StepSet::knight(), (1, 1), 12).unwrap();
        for n in 0..=12usize {
            for (&(i, j), c) in grid.layer(n) {
                assert!(!c.is_zero());
                assert_eq!(i + j - 2, n as i64, "length differs from i+j-2");
                assert_eq!(i.rem_euclid(3), j.rem_euclid(3), "congruence violated");
            }
        }
    }

    #[test]
    fn knight_length_sequence_start() {
        let grid = count_quadrant(&StepSet::knight(), (1, 1), 3).unwrap();
        let a = grid.length_sequence();
        let expect: [u32; 4] = [1, 2, 2, 4];
        for (n, v) in expect.iter().enumerate() {
            assert_eq!(a[n], BigUint::from(*v));
        }
    }

    #[test]
    fn square_lattice_closed_form() {
        let grid = count_quadrant(&StepSet::square_lattice(), (0, 0), 14).unwrap();
        let a = grid.length_sequence();
        for n in 0..=14u64 {
            let expect = binomial(n, n / 2) * binomial(n + 1, n.div_ceil(2));
            assert_eq!(a[n as usize], expect, "square-lattice count at n={n}");
        }
        assert_eq!(a[2], BigUint::from(6u32));
    }

    #[test]
    fn diagonal_lattice_closed_form() {
        let grid = count_quadrant(&StepSet::diagonal_lattice(), (0, 0), 14).unwrap();
        let a = grid.length_sequence();
        for n in 0..=14u64 {
            let b = binomial(n, n / 2);
            assert_eq!(a[n as usize], &b * &b, "diagonal-lattice count at n={n}");
        }
        assert_eq!(a[4], BigUint::from(36u32));
    }

    #[test]
    fn start_outside_region_rejected() {
        assert_eq!(
            count_quadrant(&StepSet::square_lattice(), (0, -1), 2).unwrap_err(),
            GridError::StartOutsideRegion(0, -1)
        );
        assert_eq!(
            count_half_plane(&StepSet::square_lattice(), (-1, 3), 2).unwrap_err(),
            GridError::StartOutsideRegion(-1, 3)
        );
        assert!(count_half_plane(&StepSet::square_lattice(), (0, -5), 2).is_ok());
    }

    #[test]
    fn half_plane_allows_negative_ordinates() {
        let grid = count_half_plane(&StepSet::square_lattice(), (0, 0), 1).unwrap();
        let a = grid.length_sequence();
        // N, E, S are legal; W leaves the half-plane
        assert_eq!(a[1], BigUint::from(3u32));
        assert_eq!(grid.count(0, -1, 1), BigUint::from(1u32));
    }

    #[test]
    fn quadrant_bounded_by_half_plane() {
        let s = StepSet::square_lattice();
        let q = count_quadrant(&s, (1, 1), 8).unwrap();
        let h = count_half_plane(&s, (1, 1), 8).unwrap();
        for n in 0..=8usize {
            for (&(i, j), c) in q.layer(n) {
                assert!(c <= &h.count(i, j, n), "quadrant exceeds half-plane at ({i},{j},{n})");
            }
        }
    }

    #[test]
    fn truncation_is_monotone() {
        let s = StepSet::diagonal_lattice();
        let small = count_quadrant(&s, (0, 0), 6).unwrap();
        let large = count_quadrant(&s, (0, 0), 10).unwrap();
        for n in 0..=6usize {
            assert_eq!(small.layer(n), large.layer(n));
        }
    }

    #[test]
    fn projection_oracle_matches_half_plane() {
        for set in [StepSet::square_lattice(), StepSet::diagonal_lattice(), StepSet::knight()] {
            let grid = count_half_plane(&set, (1, 0), 7).unwrap();
            let oracle = half_line_weighted_counts(&set, (1, 0), 7).unwrap();
            for n in 0..=7usize {
                // every (i, n): full ordinate distribution and the y=1 total
                let mut per_i: BTreeMap<i64, BigUint> = BTreeMap::new();
                for (&(i, j), c) in grid.layer(n) {
                    *per_i.entry(i).or_insert_with(BigUint::zero) += c;
                    assert_eq!(
                        oracle[n].get(&i).map(|p| p.coeff(j)).unwrap_or_else(BigUint::zero),
                        c.clone(),
                        "ordinate distribution differs at (i={i}, j={j}, n={n})"
                    );
                }
                for (&i, total) in &per_i {
                    assert_eq!(oracle[n][&i].total(), total.clone());
                }
            }
        }
    }
}
