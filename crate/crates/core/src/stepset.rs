//! Finite step sets over `ℤ²` and the sufficient condition for the walk
//! generating function to be D-finite.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StepSetError {
    #[error("step set must contain at least one step")]
    Empty,
    #[error("duplicate step ({0}, {1})")]
    Duplicate(i64, i64),
    #[error("cannot parse step set: {0}")]
    Parse(String),
}

/// Outcome of the sufficient D-finiteness test. The criterion is one-sided:
/// a failing step set may still have a D-finite generating function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HolonomyVerdict {
    GuaranteedDFinite,
    Unknown,
}

impl fmt::Display for HolonomyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HolonomyVerdict::GuaranteedDFinite => write!(f, "GuaranteedDFinite"),
            HolonomyVerdict::Unknown => write!(f, "Unknown"),
        }
    }
}

/// A finite set of integer step vectors. Steps are stored sorted
/// lexicographically so that equal sets compare and hash identically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepSet {
    steps: Vec<(i64, i64)>,
    max_step: i64,
}

impl StepSet {
    pub fn new(steps: impl IntoIterator<Item = (i64, i64)>) -> Result<Self, StepSetError> {
        let mut steps: Vec<(i64, i64)> = steps.into_iter().collect();
        if steps.is_empty() {
            return Err(StepSetError::Empty);
        }
        steps.sort_unstable();
        for w in steps.windows(2) {
            if w[0] == w[1] {
                return Err(StepSetError::Duplicate(w[0].0, w[0].1));
            }
        }
        let max_step = steps
            .iter()
            .map(|&(dx, dy)| dx.abs().max(dy.abs()))
            .max()
            .unwrap();
        Ok(StepSet { steps, max_step })
    }

    /// North, East, South, West.
    pub fn square_lattice() -> Self {
        StepSet::new([(0, 1), (1, 0), (0, -1), (-1, 0)]).unwrap()
    }

    /// The four diagonal steps.
    pub fn diagonal_lattice() -> Self {
        StepSet::new([(1, 1), (1, -1), (-1, 1), (-1, -1)]).unwrap()
    }

    /// The two knight moves `{(2,-1), (-1,2)}`.
    pub fn knight() -> Self {
        StepSet::new([(2, -1), (-1, 2)]).unwrap()
    }

    pub fn steps(&self) -> &[(i64, i64)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty sets
    }

    /// Largest coordinate magnitude over all steps; sizes DP grids.
    pub fn max_step(&self) -> i64 {
        self.max_step
    }

    pub fn contains(&self, step: (i64, i64)) -> bool {
        self.steps.binary_search(&step).is_ok()
    }

    /// True iff the set is closed under `(dx, dy) ↦ (dx, -dy)`.
    pub fn is_x_symmetric(&self) -> bool {
        self.steps.iter().all(|&(dx, dy)| self.contains((dx, -dy)))
    }

    /// True iff every step has `|dy| ≤ 1`.
    pub fn has_small_height_variation(&self) -> bool {
        self.steps.iter().all(|&(_, dy)| dy.abs() <= 1)
    }

    /// Sufficient test: x-symmetric sets with small height variation have a
    /// D-finite quadrant generating function from any starting point.
    pub fn holonomy_criterion(&self) -> HolonomyVerdict {
        if self.is_x_symmetric() && self.has_small_height_variation() {
            HolonomyVerdict::GuaranteedDFinite
        } else {
            HolonomyVerdict::Unknown
        }
    }

    /// Parse the compact text form `"(2,-1);(-1,2)"`.
    pub fn parse_text(text: &str) -> Result<Self, StepSetError> {
        let mut steps = Vec::new();
        for part in text.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let inner = part
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| StepSetError::Parse(format!("expected (dx,dy), got {part:?}")))?;
            let mut nums = inner.split(',');
            let dx = nums
                .next()
                .map(str::trim)
                .and_then(|s| s.parse::<i64>().ok())
                .ok_or_else(|| StepSetError::Parse(format!("bad dx in {part:?}")))?;
            let dy = nums
                .next()
                .map(str::trim)
                .and_then(|s| s.parse::<i64>().ok())
                .ok_or_else(|| StepSetError::Parse(format!("bad dy in {part:?}")))?;
            if nums.next().is_some() {
                return Err(StepSetError::Parse(format!("too many components in {part:?}")));
            }
            steps.push((dx, dy));
        }
        StepSet::new(steps)
    }

    /// Parse a JSON array of `[dx, dy]` pairs.
    pub fn parse_json(text: &str) -> Result<Self, StepSetError> {
        let pairs: Vec<(i64, i64)> =
            serde_json::from_str::<Vec<(i64, i64)>>(text).map_err(|e| StepSetError::Parse(e.to_string()))?;
        StepSet::new(pairs)
    }

    pub fn to_json(&self) -> String {
        let pairs: Vec<[i64; 2]> = self.steps.iter().map(|&(a, b)| [a, b]).collect();
        serde_json::to_string(&pairs).unwrap()
    }
}

impl fmt::Display for StepSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (dx, dy)) in self.steps.iter().enumerate() {
            if idx > 0 {
                write!(f, ";")?;
            }
            write!(f, "({dx},{dy})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_lattice_satisfies_criterion() {
        let s = StepSet::square_lattice();
        assert!(s.is_x_symmetric());
        assert!(s.has_small_height_variation());
        assert_eq!(s.holonomy_criterion(), HolonomyVerdict::GuaranteedDFinite);
    }

    #[test]
    fn diagonal_lattice_is_symmetric() {
        let s = StepSet::diagonal_lattice();
        assert!(s.is_x_symmetric());
        assert_eq!(s.holonomy_criterion(), HolonomyVerdict::GuaranteedDFinite);
    }

    #[test]
    fn knight_fails_both_predicates() {
        let s = StepSet::knight();
        assert!(!s.is_x_symmetric());
        assert!(!s.has_small_height_variation());
        assert_eq!(s.holonomy_criterion(), HolonomyVerdict::Unknown);
    }

    #[test]
    fn kreweras_style_set_is_unknown() {
        // small height variation holds but the x-symmetry fails
        let s = StepSet::new([(1, 1), (0, -1), (-1, 0)]).unwrap();
        assert!(s.has_small_height_variation());
        assert!(!s.is_x_symmetric());
        assert_eq!(s.holonomy_criterion(), HolonomyVerdict::Unknown);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(StepSet::new([]), Err(StepSetError::Empty));
        assert_eq!(
            StepSet::new([(1, 0), (1, 0)]),
            Err(StepSetError::Duplicate(1, 0))
        );
    }

    #[test]
    fn text_round_trip() {
        let s = StepSet::parse_text("(2,-1);(-1,2)").unwrap();
        assert_eq!(s, StepSet::knight());
        assert_eq!(StepSet::parse_text(&s.to_string()).unwrap(), s);
        // whitespace tolerated
        let t = StepSet::parse_text(" ( 0 , 1 ) ; (1,0) ; (0,-1); (-1,0)").unwrap();
        assert_eq!(t, StepSet::square_lattice());
    }

    #[test]
    fn json_round_trip() {
        let s = StepSet::parse_json("[[2,-1],[-1,2]]").unwrap();
        assert_eq!(s, StepSet::knight());
        assert_eq!(StepSet::parse_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn predicates_ignore_step_order() {
        let a = StepSet::new([(0, 1), (1, 0), (0, -1), (-1, 0)]).unwrap();
        let b = StepSet::new([(-1, 0), (0, -1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.max_step(), b.max_step());
    }
}
