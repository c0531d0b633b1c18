//! Exhaustive validation of the flip correspondence: cardinalities on both
//! sides and the roundtrip identity, by brute-force generation.

mod common;

use walks_core::bijection::{flip_down, flip_up, Walk};
use walks_core::stepset::StepSet;

fn configs() -> Vec<(StepSet, (i64, i64))> {
    let mut out = Vec::new();
    for set in [StepSet::square_lattice(), StepSet::diagonal_lattice()] {
        for start in [(0, 0), (1, 1)] {
            out.push((set.clone(), start));
        }
    }
    out
}

#[test]
fn cardinalities_match_on_both_sides() {
    let n_max = 8;
    for (set, start) in configs() {
        let tallies = common::census(&set, start, n_max, |_| {});
        for n in 0..=n_max {
            assert_eq!(
                tallies.quadrant_even_axis[n], tallies.half_level0[n],
                "even/level-0 mismatch for {set} from {start:?} at n={n}"
            );
            assert_eq!(
                tallies.quadrant_odd_axis[n], tallies.half_level_m1[n],
                "odd/level-(-1) mismatch for {set} from {start:?} at n={n}"
            );
        }
    }
}

#[test]
fn flip_down_lands_in_the_right_family_and_inverts() {
    let n_max = 8;
    for (set, start) in configs() {
        common::census(&set, start, n_max, |steps| {
            let walk = Walk::new(start, steps.to_vec(), &set).expect("steps from the set");
            let down = flip_down(&walk, &set).expect("preconditions hold by construction");
            assert!(down.walk.stays_in_half_plane());
            let end = down.walk.end().1;
            let expect_end = if walk.end().1 % 2 == 0 { 0 } else { -1 };
            assert_eq!(end, expect_end, "image level for {steps:?}");
            // abscissas untouched
            assert_eq!(
                walk.vertices().iter().map(|v| v.0).collect::<Vec<_>>(),
                down.walk.vertices().iter().map(|v| v.0).collect::<Vec<_>>()
            );
            let up = flip_up(&down.walk, &set).expect("image satisfies the inverse preconditions");
            assert_eq!(up.walk, walk, "roundtrip failed for {steps:?}");
            assert_eq!(up.flipped, down.flipped, "flip index sets differ");
        });
    }
}

#[test]
fn flipped_steps_are_the_first_entrances_to_each_depth() {
    // the step flipped for level m-1 becomes the image's first descent to
    // depth -m; this is exactly what makes the inverse well-defined
    let set = StepSet::square_lattice();
    common::census(&set, (0, 0), 7, |steps| {
        let walk = Walk::new((0, 0), steps.to_vec(), &set).unwrap();
        let down = flip_down(&walk, &set).unwrap();
        let vertices = down.walk.vertices();
        for (m, &flip_index) in down.flipped.iter().enumerate() {
            let depth = -(m as i64) - 1;
            let first_entrance = vertices
                .iter()
                .position(|&(_, y)| y == depth)
                .expect("image reaches every intermediate depth");
            assert_eq!(
                first_entrance,
                flip_index + 1,
                "first entrance to {depth} for {steps:?}"
            );
        }
    });
}
