//! The recurrence engine and the grid DP are independent implementations of
//! quadrant walk counting; they must agree bit for bit. Also checks the
//! §-style consistency identity between the recurrence table and the
//! bivariate kernel.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use walks_core::enumerate::count_quadrant;
use walks_core::recurrence::{from_stepset, Evaluator, RecurrenceSpec};
use walks_core::series::{f_series, r_series, BivSeries};
use walks_core::stepset::StepSet;

#[test]
fn walk_embedding_matches_dp_grids() {
    let sets = [StepSet::knight(), StepSet::diagonal_lattice()];
    for set in &sets {
        let start = (1, 1);
        let n_max = 10;
        let grid = count_quadrant(set, start, n_max).unwrap();
        let embedding = from_stepset(set, start).unwrap();
        let mut evaluator = Evaluator::new(&embedding.spec).unwrap();
        let (ox, oy) = embedding.offset;
        for n in 0..=n_max {
            for (&(i, j), c) in grid.layer(n) {
                let value = evaluator.value(&[i + ox, j + oy, n as i64]).unwrap();
                assert!(value.is_integer());
                assert_eq!(
                    value.to_integer(),
                    BigInt::from(c.clone()),
                    "disagreement at ({i},{j},{n}) for {set}"
                );
            }
            // spot-check zeros around the reachable band
            let value = evaluator.value(&[ox, oy + 1 + 3 * n as i64, n as i64]).unwrap();
            let expect = grid.count(0, 1 + 3 * n as i64, n);
            assert_eq!(value.to_integer(), BigInt::from(expect));
        }
    }
}

#[test]
fn knight_embedding_aggregates_to_table_entry() {
    let embedding = from_stepset(&StepSet::knight(), (1, 1)).unwrap();
    let mut evaluator = Evaluator::new(&embedding.spec).unwrap();
    let (ox, oy) = embedding.offset;
    let mut total = BigRational::zero();
    for n in 0..=20i64 {
        total += evaluator.value(&[8 + ox, 8 + oy, n]).unwrap();
    }
    assert_eq!(total, BigRational::from_integer(BigInt::from(1440)));
}

#[test]
fn recurrence_table_satisfies_its_kernel_equation() {
    // (xy − x³ − y³)·A(x,y) = R(x,y) − F(x) − F(y) with A from the table
    let degree = 12;
    let spec = RecurrenceSpec::knight_2d();
    let mut evaluator = Evaluator::new(&spec).unwrap();
    let mut a = BivSeries::zero(degree);
    for i in 0..=degree as i64 {
        for j in 0..=degree as i64 {
            if i + j > degree as i64 {
                continue;
            }
            let value = evaluator.value(&[i + 2, j + 2]).unwrap();
            a = a.add(&BivSeries::monomial(i as usize, j as usize, value, degree));
        }
    }
    let kernel = BivSeries::monomial(1, 1, BigRational::from_integer(1.into()), degree + 1)
        .sub(&BivSeries::monomial(3, 0, BigRational::from_integer(1.into()), degree + 1))
        .sub(&BivSeries::monomial(0, 3, BigRational::from_integer(1.into()), degree + 1));
    let lhs = kernel.mul(&a);
    let f = f_series(degree);
    let rhs = r_series(degree)
        .sub(&BivSeries::from_x_series(&f, degree))
        .sub(&BivSeries::from_y_series(&f, degree));
    assert_eq!(lhs.first_difference(&rhs, degree), None, "kernel identity for the table");
}

#[test]
fn table_dominates_shifted_walk_counts() {
    // a_{i,j} ≥ Q_{i-2,j-2} for i,j ≥ 2
    let grid = count_quadrant(&StepSet::knight(), (1, 1), 16).unwrap();
    let spec = RecurrenceSpec::knight_2d();
    let mut evaluator = Evaluator::new(&spec).unwrap();
    let agg = grid.aggregated();
    for i in 2..=12i64 {
        for j in 2..=12i64 {
            if (i - 2) + (j - 2) > 14 {
                continue;
            }
            let a = evaluator.value(&[i, j]).unwrap();
            let q = agg
                .get(&(i - 2, j - 2))
                .cloned()
                .unwrap_or_default();
            assert!(
                a >= BigRational::from_integer(BigInt::from(q.clone())),
                "a_({i},{j}) < Q_({},{})",
                i - 2,
                j - 2
            );
        }
    }
}
