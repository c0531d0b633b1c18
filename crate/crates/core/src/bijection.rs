//! The step-flipping correspondence between quadrant walks that touch the
//! x-axis and right half-plane walks ending at level 0 (even final ordinate)
//! or level −1 (odd final ordinate).
//!
//! Both maps require a step set that is symmetric about the x-axis and has
//! small height variations; they flip the vertical component of selected
//! steps and leave all abscissas untouched.

use thiserror::Error;

use crate::stepset::StepSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WalkError {
    #[error("step ({0}, {1}) is not in the step set")]
    StepNotInSet(i64, i64),
    #[error("walk leaves the quadrant at step {0}")]
    LeftQuadrant(usize),
    #[error("walk leaves the right half-plane at step {0}")]
    LeftHalfPlane(usize),
    #[error("walk never visits the x-axis")]
    NeverHitsAxis,
    #[error("walk must end at ordinate 0 or -1, ends at {0}")]
    WrongEndLevel(i64),
    #[error("walk must start at ordinate >= 0, starts at {0}")]
    StartBelowAxis(i64),
    #[error("step set is not symmetric about the x-axis")]
    AsymmetricStepSet,
    #[error("step set has steps with |dy| > 1")]
    LargeHeightVariation,
}

/// A walk: a start vertex plus an ordered list of steps. The vertex sequence
/// is recovered by prefix sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    start: (i64, i64),
    steps: Vec<(i64, i64)>,
}

impl Walk {
    /// Build a walk, checking every step belongs to `set`.
    pub fn new(
        start: (i64, i64),
        steps: Vec<(i64, i64)>,
        set: &StepSet,
    ) -> Result<Self, WalkError> {
        for &(dx, dy) in &steps {
            if !set.contains((dx, dy)) {
                return Err(WalkError::StepNotInSet(dx, dy));
            }
        }
        Ok(Walk { start, steps })
    }

    pub fn start(&self) -> (i64, i64) {
        self.start
    }

    pub fn steps(&self) -> &[(i64, i64)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// All `len() + 1` vertices, starting from the start vertex.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut pos = self.start;
        out.push(pos);
        for &(dx, dy) in &self.steps {
            pos = (pos.0 + dx, pos.1 + dy);
            out.push(pos);
        }
        out
    }

    pub fn end(&self) -> (i64, i64) {
        let mut pos = self.start;
        for &(dx, dy) in &self.steps {
            pos = (pos.0 + dx, pos.1 + dy);
        }
        pos
    }

    pub fn stays_in_quadrant(&self) -> bool {
        self.vertices().iter().all(|&(x, y)| x >= 0 && y >= 0)
    }

    pub fn stays_in_half_plane(&self) -> bool {
        self.vertices().iter().all(|&(x, _)| x >= 0)
    }

    pub fn min_ordinate(&self) -> i64 {
        self.vertices().iter().map(|&(_, y)| y).min().unwrap()
    }

    pub fn hits_axis(&self) -> bool {
        self.vertices().iter().any(|&(_, y)| y == 0)
    }
}

/// Image walk together with the indices of the flipped steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipResult {
    pub walk: Walk,
    pub flipped: Vec<usize>,
}

fn require_symmetric_small(set: &StepSet) -> Result<(), WalkError> {
    if !set.is_x_symmetric() {
        return Err(WalkError::AsymmetricStepSet);
    }
    if !set.has_small_height_variation() {
        return Err(WalkError::LargeHeightVariation);
    }
    Ok(())
}

fn flip_steps(walk: &Walk, indices: &[usize]) -> Walk {
    let mut steps = walk.steps.clone();
    for &t in indices {
        steps[t].1 = -steps[t].1;
    }
    Walk {
        start: walk.start,
        steps,
    }
}

/// Map a quadrant walk that visits the x-axis to a half-plane walk ending at
/// level 0 (when the final ordinate is even) or −1 (odd). The flipped steps
/// are exactly the ones following the last visit to each of the levels
/// `0 .. ⌈e/2⌉`, where `e` is the final ordinate.
pub fn flip_down(walk: &Walk, set: &StepSet) -> Result<FlipResult, WalkError> {
    require_symmetric_small(set)?;
    let vertices = walk.vertices();
    for (t, &(x, y)) in vertices.iter().enumerate() {
        if x < 0 || y < 0 {
            return Err(WalkError::LeftQuadrant(t));
        }
    }
    let e = vertices.last().unwrap().1;
    let flips = ((e + 1) / 2) as usize; // e = 2k -> k, e = 2k+1 -> k+1
    if flips > 0 && vertices.iter().all(|&(_, y)| y != 0) {
        return Err(WalkError::NeverHitsAxis);
    }
    let mut flipped = Vec::with_capacity(flips);
    for level in 0..flips as i64 {
        // last vertex at this level; its outgoing step goes up and is flipped
        let t = vertices
            .iter()
            .rposition(|&(_, y)| y == level)
            .expect("level below the endpoint is visited");
        debug_assert!(t < walk.len(), "endpoint sits above every flipped level");
        debug_assert_eq!(walk.steps[t].1, 1, "step after a last visit ascends");
        flipped.push(t);
    }
    flipped.sort_unstable();
    let image = flip_steps(walk, &flipped);
    debug_assert!(image.stays_in_half_plane());
    debug_assert_eq!(image.end().1, e - 2 * flips as i64);
    debug_assert!(image.end().1 == 0 || image.end().1 == -1);
    debug_assert_eq!(image.min_ordinate(), -(flips as i64));
    Ok(FlipResult {
        walk: image,
        flipped,
    })
}

/// Inverse of [`flip_down`]: a half-plane walk ending at level 0 or −1 with
/// minimum ordinate `−k` becomes a quadrant walk ending at ordinate `2k`
/// (respectively `2k−1`). The flipped steps are the first ones to reach each
/// of the levels `−1 .. −k`.
pub fn flip_up(walk: &Walk, set: &StepSet) -> Result<FlipResult, WalkError> {
    require_symmetric_small(set)?;
    if walk.start.1 < 0 {
        return Err(WalkError::StartBelowAxis(walk.start.1));
    }
    let vertices = walk.vertices();
    for (t, &(x, _)) in vertices.iter().enumerate() {
        if x < 0 {
            return Err(WalkError::LeftHalfPlane(t));
        }
    }
    let e = vertices.last().unwrap().1;
    if e != 0 && e != -1 {
        return Err(WalkError::WrongEndLevel(e));
    }
    let depth = -vertices.iter().map(|&(_, y)| y).min().unwrap();
    let mut flipped = Vec::with_capacity(depth.max(0) as usize);
    for level in 1..=depth {
        // first vertex at level -level; its incoming step descends and is flipped
        let t = vertices
            .iter()
            .position(|&(_, y)| y == -level)
            .expect("intermediate depth is visited");
        debug_assert!(t >= 1);
        debug_assert_eq!(walk.steps[t - 1].1, -1, "first entry to a new depth descends");
        flipped.push(t - 1);
    }
    flipped.sort_unstable();
    let image = flip_steps(walk, &flipped);
    debug_assert!(image.stays_in_quadrant());
    debug_assert_eq!(image.end().1, e + 2 * depth);
    debug_assert!(image.hits_axis() || depth == 0);
    Ok(FlipResult {
        walk: image,
        flipped,
    })
}
