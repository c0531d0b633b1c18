//! Brute-force oracles shared by the integration tests: exhaustive walk
//! generation by DFS over raw step sequences, independent of the grid DP
//! and of the flip maps.

use std::collections::BTreeMap;

use walks_core::stepset::StepSet;

/// Per-length tallies of the walk families tied by the flip bijection.
#[derive(Debug)]
pub struct WalkCensus {
    /// quadrant-confined, touches the x-axis, even final ordinate
    pub quadrant_even_axis: Vec<u64>,
    /// quadrant-confined, touches the x-axis, odd final ordinate
    pub quadrant_odd_axis: Vec<u64>,
    /// half-plane-confined, ends at ordinate 0
    pub half_level0: Vec<u64>,
    /// half-plane-confined, ends at ordinate −1
    pub half_level_m1: Vec<u64>,
}

/// Walk the full |S|-ary tree of step sequences up to `n_max`, tallying the
/// census and handing every quadrant-confined axis-touching walk to the
/// callback (as its step list).
pub fn census(
    steps: &StepSet,
    start: (i64, i64),
    n_max: usize,
    mut on_quadrant_axis_walk: impl FnMut(&[(i64, i64)]),
) -> WalkCensus {
    let mut tallies = WalkCensus {
        quadrant_even_axis: vec![0; n_max + 1],
        quadrant_odd_axis: vec![0; n_max + 1],
        half_level0: vec![0; n_max + 1],
        half_level_m1: vec![0; n_max + 1],
    };
    struct Frame {
        pos: (i64, i64),
        in_quadrant: bool,
        in_half_plane: bool,
        hit_axis: bool,
        next_step: usize,
    }
    let mut path: Vec<(i64, i64)> = Vec::with_capacity(n_max);
    let mut stack = vec![Frame {
        pos: start,
        in_quadrant: start.0 >= 0 && start.1 >= 0,
        in_half_plane: start.0 >= 0,
        hit_axis: start.1 == 0,
        next_step: 0,
    }];
    while let Some(frame) = stack.last() {
        let depth = stack.len() - 1;
        if frame.next_step == 0 {
            // first visit: record this node
            if frame.in_quadrant && frame.hit_axis {
                if frame.pos.1 % 2 == 0 {
                    tallies.quadrant_even_axis[depth] += 1;
                } else {
                    tallies.quadrant_odd_axis[depth] += 1;
                }
                on_quadrant_axis_walk(&path);
            }
            if frame.in_half_plane {
                if frame.pos.1 == 0 {
                    tallies.half_level0[depth] += 1;
                } else if frame.pos.1 == -1 {
                    tallies.half_level_m1[depth] += 1;
                }
            }
        }
        if depth == n_max || frame.next_step == steps.len() {
            stack.pop();
            path.pop();
            continue;
        }
        let step = steps.steps()[frame.next_step];
        let frame_pos = frame.pos;
        let parent_quadrant = frame.in_quadrant;
        let parent_half = frame.in_half_plane;
        let parent_axis = frame.hit_axis;
        stack.last_mut().unwrap().next_step += 1;
        let pos = (frame_pos.0 + step.0, frame_pos.1 + step.1);
        path.push(step);
        stack.push(Frame {
            pos,
            in_quadrant: parent_quadrant && pos.0 >= 0 && pos.1 >= 0,
            in_half_plane: parent_half && pos.0 >= 0,
            // any vertex at ordinate 0 counts; the tallies gate on
            // quadrant confinement separately
            hit_axis: parent_axis || pos.1 == 0,
            next_step: 0,
        });
    }
    tallies
}

/// Endpoint-resolved brute-force counts per length, confined to the
/// quadrant (`half_plane = false`) or the right half-plane.
pub fn brute_counts(
    steps: &StepSet,
    start: (i64, i64),
    n_max: usize,
    half_plane: bool,
) -> Vec<BTreeMap<(i64, i64), u64>> {
    let mut layers = vec![BTreeMap::new(); n_max + 1];
    fn recurse(
        steps: &StepSet,
        pos: (i64, i64),
        depth: usize,
        n_max: usize,
        half_plane: bool,
        layers: &mut Vec<BTreeMap<(i64, i64), u64>>,
    ) {
        *layers[depth].entry(pos).or_insert(0) += 1;
        if depth == n_max {
            return;
        }
        for &(dx, dy) in steps.steps() {
            let next = (pos.0 + dx, pos.1 + dy);
            let ok = next.0 >= 0 && (half_plane || next.1 >= 0);
            if ok {
                recurse(steps, next, depth + 1, n_max, half_plane, layers);
            }
        }
    }
    recurse(steps, start, 0, n_max, half_plane, &mut layers);
    layers
}

/// Pascal-triangle binomials, independent of the crate's own helper.
pub fn pascal(limit: usize) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = vec![vec![1]];
    for n in 1..=limit {
        let prev = &rows[n - 1];
        let mut row = vec![1u64; n + 1];
        for k in 1..n {
            row[k] = prev[k - 1] + prev[k];
        }
        rows.push(row);
    }
    rows
}
