//! Demand-driven, memoized evaluation of a validated recurrence.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::{validate, RecurrenceError, RecurrenceSpec, Validation};

/// Memoized evaluator. Construction validates the recurrence; evaluation
/// then terminates because every dependency strictly lowers the ranking
/// functional.
pub struct Evaluator {
    spec: RecurrenceSpec,
    memo: BTreeMap<Vec<i64>, BigRational>,
}

impl Evaluator {
    pub fn new(spec: &RecurrenceSpec) -> Result<Self, RecurrenceError> {
        match validate(spec) {
            Validation::Valid(_) => Ok(Evaluator {
                spec: spec.clone(),
                memo: BTreeMap::new(),
            }),
            Validation::Invalid(_) => Err(RecurrenceError::HullMeetsOrthant),
        }
    }

    /// Exact value at one point (coordinates may be negative only when the
    /// spec extends by zero there).
    pub fn value(&mut self, point: &[i64]) -> Result<BigRational, RecurrenceError> {
        assert_eq!(point.len(), self.spec.dim(), "point has wrong dimension");
        if let Some(v) = self.memo.get(point) {
            return Ok(v.clone());
        }
        // explicit work stack: dependency chains can be long
        let mut stack: Vec<Vec<i64>> = vec![point.to_vec()];
        while let Some(top) = stack.last() {
            if self.memo.contains_key(top.as_slice()) {
                stack.pop();
                continue;
            }
            let top = top.clone();
            if top.iter().any(|&v| v < 0) {
                if self.spec.zero_extension() {
                    self.memo.insert(top, BigRational::zero());
                    stack.pop();
                    continue;
                }
                return Err(RecurrenceError::UndefinedValue(top));
            }
            let in_recurrence_region = top
                .iter()
                .zip(self.spec.start())
                .all(|(&n, &s)| n >= s);
            if !in_recurrence_region {
                let v = self.spec.initial().value_at(&top);
                self.memo.insert(top, v);
                stack.pop();
                continue;
            }
            let mut ready = true;
            let mut acc = BigRational::zero();
            for shift in self.spec.shifts() {
                let dep: Vec<i64> = top.iter().zip(&shift.offsets).map(|(&n, &h)| n + h).collect();
                if dep.iter().any(|&v| v < 0) && !self.spec.zero_extension() {
                    return Err(RecurrenceError::UndefinedValue(dep));
                }
                match self.memo.get(dep.as_slice()) {
                    Some(v) => {
                        if ready {
                            acc += &shift.coeff * v;
                        }
                    }
                    None => {
                        ready = false;
                        stack.push(dep);
                    }
                }
            }
            if ready {
                self.memo.insert(top, acc);
                stack.pop();
            }
        }
        Ok(self.memo[point].clone())
    }

    pub fn spec(&self) -> &RecurrenceSpec {
        &self.spec
    }
}

/// Evaluate at an explicit list of points.
pub fn evaluate_points(
    spec: &RecurrenceSpec,
    points: &[Vec<i64>],
) -> Result<BTreeMap<Vec<i64>, BigRational>, RecurrenceError> {
    let mut evaluator = Evaluator::new(spec)?;
    let mut out = BTreeMap::new();
    for p in points {
        let v = evaluator.value(p)?;
        out.insert(p.clone(), v);
    }
    Ok(out)
}

/// Evaluate on the axis-aligned box `lo ≤ n ≤ hi` (componentwise).
pub fn evaluate_box(
    spec: &RecurrenceSpec,
    lo: &[i64],
    hi: &[i64],
) -> Result<BTreeMap<Vec<i64>, BigRational>, RecurrenceError> {
    if lo.len() != spec.dim() || hi.len() != spec.dim() {
        return Err(RecurrenceError::Malformed(format!(
            "box bounds must have dimension {}",
            spec.dim()
        )));
    }
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return Err(RecurrenceError::Malformed("empty box".into()));
    }
    let mut points = Vec::new();
    let mut current: Vec<i64> = lo.to_vec();
    loop {
        points.push(current.clone());
        // odometer increment
        let mut k = 0;
        loop {
            if k == current.len() {
                return evaluate_points(spec, &points);
            }
            current[k] += 1;
            if current[k] <= hi[k] {
                break;
            }
            current[k] = lo[k];
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use crate::recurrence::RecurrenceSpec;

    #[test]
    fn knight_2d_published_values() {
        let spec = RecurrenceSpec::knight_2d();
        let mut ev = Evaluator::new(&spec).unwrap();
        let expect = [
            ((2, 6), 5),
            ((3, 6), 7),
            ((5, 5), 14),
            ((6, 3), 7),
            ((4, 4), 6),
            ((2, 2), 2),
        ];
        for ((i, j), v) in expect {
            assert_eq!(ev.value(&[i, j]).unwrap(), rat(v), "a_({i},{j})");
        }
        for i in 0..=6 {
            assert_eq!(ev.value(&[i, 0]).unwrap(), rat(1));
            assert_eq!(ev.value(&[i, 1]).unwrap(), rat(1));
        }
    }

    #[test]
    fn knight_2d_is_symmetric() {
        let spec = RecurrenceSpec::knight_2d();
        let mut ev = Evaluator::new(&spec).unwrap();
        for i in 0..=10i64 {
            for j in 0..=10i64 {
                assert_eq!(
                    ev.value(&[i, j]).unwrap(),
                    ev.value(&[j, i]).unwrap(),
                    "symmetry at ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn box_evaluation_covers_the_grid() {
        let spec = RecurrenceSpec::knight_2d();
        let table = evaluate_box(&spec, &[0, 0], &[6, 6]).unwrap();
        assert_eq!(table.len(), 49);
        assert_eq!(table[&vec![5, 5]], rat(14));
    }

    #[test]
    fn invalid_recurrence_cannot_be_evaluated() {
        let spec = RecurrenceSpec::new(
            2,
            vec![super::super::Shift {
                offsets: vec![1, 1],
                coeff: rat(1),
            }],
            vec![0, 0],
            super::super::InitialCondition::Constant { value: rat(1) },
        )
        .unwrap();
        assert!(matches!(
            Evaluator::new(&spec),
            Err(RecurrenceError::HullMeetsOrthant)
        ));
    }

    #[test]
    fn deep_chains_do_not_overflow_the_stack() {
        let spec = RecurrenceSpec::knight_2d();
        let mut ev = Evaluator::new(&spec).unwrap();
        // forces a dependency chain thousands of points long
        let v = ev.value(&[400, 2]).unwrap();
        assert!(v.is_integer());
    }
}
