//! Multidimensional sequences defined by constant-coefficient shift
//! recurrences with initial conditions, in the form
//!
//! ```text
//! a_n = Σ_{h ∈ H} c_h · a_{n+h}   for n ≥ s (componentwise)
//! a_n = φ(n)                      for n ≥ 0, n not ≥ s
//! ```
//!
//! Validity (a ranking weight certifying terminating evaluation, or an
//! explicit convex-combination witness that none exists) is decided by an
//! exact rational simplex; evaluation is demand-driven and memoized.

mod eval;
mod simplex;

pub use eval::{evaluate_box, evaluate_points, Evaluator};
pub use simplex::{check_ranking_weight, check_witness, validate, Validation};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::stepset::StepSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecurrenceError {
    #[error("malformed recurrence: {0}")]
    Malformed(String),
    #[error("the convex hull of the shifts meets the first orthant; evaluation may not terminate")]
    HullMeetsOrthant,
    #[error("value requested at {0:?} is undefined (negative coordinate without zero extension)")]
    UndefinedValue(Vec<i64>),
}

/// One shift `h` with its coefficient `c_h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shift {
    #[serde(rename = "h")]
    pub offsets: Vec<i64>,
    #[serde(rename = "c", with = "rational_string")]
    pub coeff: BigRational,
}

/// Initial conditions in a serializable expression form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum InitialCondition {
    Constant {
        #[serde(with = "rational_string")]
        value: BigRational,
    },
    /// `value` at one point, zero elsewhere.
    PointMass {
        point: Vec<i64>,
        #[serde(with = "rational_string")]
        value: BigRational,
    },
    Table {
        entries: Vec<TableEntry>,
        #[serde(with = "rational_string")]
        default: BigRational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub n: Vec<i64>,
    #[serde(with = "rational_string")]
    pub value: BigRational,
}

impl InitialCondition {
    pub fn value_at(&self, n: &[i64]) -> BigRational {
        match self {
            InitialCondition::Constant { value } => value.clone(),
            InitialCondition::PointMass { point, value } => {
                if point.as_slice() == n {
                    value.clone()
                } else {
                    BigRational::zero()
                }
            }
            InitialCondition::Table { entries, default } => entries
                .iter()
                .find(|e| e.n.as_slice() == n)
                .map(|e| e.value.clone())
                .unwrap_or_else(|| default.clone()),
        }
    }
}

/// Generating-function class predicted by the apex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GfClass {
    Rational,
    Algebraic,
    Unknown,
}

impl fmt::Display for GfClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfClass::Rational => write!(f, "Rational"),
            GfClass::Algebraic => write!(f, "Algebraic"),
            GfClass::Unknown => write!(f, "Unknown"),
        }
    }
}

/// A full recurrence specification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct RecurrenceSpec {
    dim: usize,
    shifts: Vec<Shift>,
    start: Vec<i64>,
    initial: InitialCondition,
    /// Treat points with a negative coordinate as zero. On by default; the
    /// walk embedding relies on it conceptually even though its dependencies
    /// never leave the orthant.
    zero_extension: bool,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    d: usize,
    shifts: Vec<Shift>,
    start: Vec<i64>,
    initial: InitialCondition,
    #[serde(default = "default_true")]
    zero_extension: bool,
}

fn default_true() -> bool {
    true
}

impl TryFrom<RawSpec> for RecurrenceSpec {
    type Error = RecurrenceError;
    fn try_from(raw: RawSpec) -> Result<Self, Self::Error> {
        RecurrenceSpec::with_zero_extension(raw.d, raw.shifts, raw.start, raw.initial, raw.zero_extension)
    }
}

impl From<RecurrenceSpec> for RawSpec {
    fn from(spec: RecurrenceSpec) -> RawSpec {
        RawSpec {
            d: spec.dim,
            shifts: spec.shifts,
            start: spec.start,
            initial: spec.initial,
            zero_extension: spec.zero_extension,
        }
    }
}

impl RecurrenceSpec {
    pub fn new(
        dim: usize,
        shifts: Vec<Shift>,
        start: Vec<i64>,
        initial: InitialCondition,
    ) -> Result<Self, RecurrenceError> {
        Self::with_zero_extension(dim, shifts, start, initial, true)
    }

    pub fn with_zero_extension(
        dim: usize,
        shifts: Vec<Shift>,
        start: Vec<i64>,
        initial: InitialCondition,
        zero_extension: bool,
    ) -> Result<Self, RecurrenceError> {
        if dim == 0 {
            return Err(RecurrenceError::Malformed("dimension must be positive".into()));
        }
        if shifts.is_empty() {
            return Err(RecurrenceError::Malformed("at least one shift required".into()));
        }
        if start.len() != dim {
            return Err(RecurrenceError::Malformed(format!(
                "start has {} coordinates, expected {dim}",
                start.len()
            )));
        }
        if start.iter().any(|&v| v < 0) {
            return Err(RecurrenceError::Malformed("start must lie in the orthant".into()));
        }
        let mut seen = BTreeMap::new();
        for shift in &shifts {
            if shift.offsets.len() != dim {
                return Err(RecurrenceError::Malformed(format!(
                    "shift {:?} has wrong dimension",
                    shift.offsets
                )));
            }
            if shift.coeff.is_zero() {
                return Err(RecurrenceError::Malformed(format!(
                    "shift {:?} has zero coefficient",
                    shift.offsets
                )));
            }
            if seen.insert(shift.offsets.clone(), ()).is_some() {
                return Err(RecurrenceError::Malformed(format!(
                    "duplicate shift {:?}",
                    shift.offsets
                )));
            }
            for (sv, hv) in start.iter().zip(&shift.offsets) {
                if sv + hv < 0 {
                    return Err(RecurrenceError::Malformed(format!(
                        "start {start:?} plus shift {:?} leaves the orthant",
                        shift.offsets
                    )));
                }
            }
        }
        Ok(RecurrenceSpec {
            dim,
            shifts,
            start,
            initial,
            zero_extension,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn shifts(&self) -> &[Shift] {
        &self.shifts
    }

    pub fn start(&self) -> &[i64] {
        &self.start
    }

    pub fn initial(&self) -> &InitialCondition {
        &self.initial
    }

    pub fn zero_extension(&self) -> bool {
        self.zero_extension
    }

    /// Componentwise maximum of the shifts together with the origin.
    pub fn apex(&self) -> Vec<i64> {
        let mut apex = vec![0i64; self.dim];
        for shift in &self.shifts {
            for (a, &h) in apex.iter_mut().zip(&shift.offsets) {
                *a = (*a).max(h);
            }
        }
        apex
    }

    /// Class of the solution's generating function predicted by the apex:
    /// rational when the apex is the origin, algebraic with exactly one
    /// positive coordinate, unknown with two or more.
    pub fn classification(&self) -> GfClass {
        let positive = self.apex().iter().filter(|&&v| v > 0).count();
        match positive {
            0 => GfClass::Rational,
            1 => GfClass::Algebraic,
            _ => GfClass::Unknown,
        }
    }

    /// The 2-D recurrence with knight shifts `(1,−2)` and `(−2,1)`, start
    /// `(2,2)`, and all-ones initial conditions.
    pub fn knight_2d() -> RecurrenceSpec {
        RecurrenceSpec::new(
            2,
            vec![
                Shift {
                    offsets: vec![1, -2],
                    coeff: BigRational::from_integer(1.into()),
                },
                Shift {
                    offsets: vec![-2, 1],
                    coeff: BigRational::from_integer(1.into()),
                },
            ],
            vec![2, 2],
            InitialCondition::Constant {
                value: BigRational::from_integer(1.into()),
            },
        )
        .expect("well-formed by construction")
    }
}

/// A walk-counting recurrence together with the index translation mapping
/// walk cells to recurrence points: `Q_{i,j}(n)` is the value at
/// `(i + offset.0, j + offset.1, n)`.
#[derive(Clone, Debug)]
pub struct StepsetEmbedding {
    pub spec: RecurrenceSpec,
    pub offset: (i64, i64),
}

/// Embed quadrant walk counting as a 3-D recurrence: shifts
/// `(−h, −k, −1)` for each step `(h, k)`, all coefficients 1, with a unit
/// mass at the translated start on the length-0 layer.
pub fn from_stepset(steps: &StepSet, start: (i64, i64)) -> Result<StepsetEmbedding, RecurrenceError> {
    if start.0 < 0 || start.1 < 0 {
        return Err(RecurrenceError::Malformed(format!(
            "walk start ({}, {}) must lie in the quadrant",
            start.0, start.1
        )));
    }
    let off_x = steps.steps().iter().map(|&(dx, _)| dx).max().unwrap().max(0);
    let off_y = steps.steps().iter().map(|&(_, dy)| dy).max().unwrap().max(0);
    let shifts = steps
        .steps()
        .iter()
        .map(|&(dx, dy)| Shift {
            offsets: vec![-dx, -dy, -1],
            coeff: BigRational::from_integer(1.into()),
        })
        .collect();
    let spec = RecurrenceSpec::new(
        3,
        shifts,
        vec![off_x, off_y, 1],
        InitialCondition::PointMass {
            point: vec![start.0 + off_x, start.1 + off_y, 0],
            value: BigRational::from_integer(1.into()),
        },
    )?;
    Ok(StepsetEmbedding {
        spec,
        offset: (off_x, off_y),
    })
}

/// Coefficients of `F(x) = Σ_{i≥2} a_{i,2} x^{i+1}` from the knight-shift
/// 2-D recurrence, through `x^order`.
pub fn f_sequence(order: usize) -> Vec<BigUint> {
    let spec = RecurrenceSpec::knight_2d();
    let mut evaluator = Evaluator::new(&spec).expect("knight shifts admit a ranking weight");
    let mut out = vec![BigUint::zero(); order + 1];
    for i in 2..=(order as i64).saturating_sub(1) {
        let value = evaluator
            .value(&[i, 2])
            .expect("interior points are defined");
        let exp = (i + 1) as usize;
        if exp <= order {
            assert!(value.is_integer() && !value.is_negative(), "counts are natural numbers");
            out[exp] = value.to_integer().to_biguint().expect("nonnegative");
        }
    }
    out
}

mod rational_string {
    use num_rational::BigRational;
    use serde::{de, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(value: &BigRational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(de)?;
        BigRational::from_str(&text)
            .map_err(|e| de::Error::custom(format!("bad rational {text:?}: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn apex_and_class_examples() {
        let knight = RecurrenceSpec::knight_2d();
        assert_eq!(knight.apex(), vec![1, 1]);
        assert_eq!(knight.classification(), GfClass::Unknown);

        let embed = from_stepset(&StepSet::knight(), (1, 1)).unwrap();
        assert_eq!(embed.spec.apex(), vec![1, 1, 0]);
        assert_eq!(embed.spec.classification(), GfClass::Unknown);

        let decreasing = RecurrenceSpec::new(
            2,
            vec![
                Shift { offsets: vec![-1, 0], coeff: rat(1) },
                Shift { offsets: vec![0, -1], coeff: rat(1) },
            ],
            vec![1, 1],
            InitialCondition::Constant { value: rat(1) },
        )
        .unwrap();
        assert_eq!(decreasing.apex(), vec![0, 0]);
        assert_eq!(decreasing.classification(), GfClass::Rational);

        let one_positive = RecurrenceSpec::new(
            2,
            vec![Shift { offsets: vec![1, -2], coeff: rat(1) }],
            vec![0, 2],
            InitialCondition::Constant { value: rat(1) },
        )
        .unwrap();
        assert_eq!(one_positive.classification(), GfClass::Algebraic);
    }

    #[test]
    fn knight_embedding_shape() {
        let embed = from_stepset(&StepSet::knight(), (1, 1)).unwrap();
        let offsets: Vec<&[i64]> = embed.spec.shifts().iter().map(|s| s.offsets.as_slice()).collect();
        assert!(offsets.contains(&[-2i64, 1, -1].as_slice()));
        assert!(offsets.contains(&[1i64, -2, -1].as_slice()));
        assert_eq!(embed.spec.start(), &[2, 2, 1]);
        assert_eq!(embed.offset, (2, 2));
    }

    #[test]
    fn square_embedding_has_four_descending_shifts() {
        let embed = from_stepset(&StepSet::square_lattice(), (0, 0)).unwrap();
        assert_eq!(embed.spec.shifts().len(), 4);
        for s in embed.spec.shifts() {
            assert_eq!(s.offsets[2], -1);
        }
    }

    #[test]
    fn malformed_specs_are_rejected() {
        let err = RecurrenceSpec::new(
            2,
            vec![Shift { offsets: vec![1, -2, 0], coeff: rat(1) }],
            vec![2, 2],
            InitialCondition::Constant { value: rat(1) },
        );
        assert!(matches!(err, Err(RecurrenceError::Malformed(_))));

        let err = RecurrenceSpec::new(
            2,
            vec![Shift { offsets: vec![-3, 0], coeff: rat(1) }],
            vec![2, 2],
            InitialCondition::Constant { value: rat(1) },
        );
        assert!(matches!(err, Err(RecurrenceError::Malformed(_))), "s+H leaves the orthant");

        let err = RecurrenceSpec::new(
            2,
            vec![Shift { offsets: vec![-1, 0], coeff: rat(0) }],
            vec![2, 2],
            InitialCondition::Constant { value: rat(1) },
        );
        assert!(matches!(err, Err(RecurrenceError::Malformed(_))));
    }

    #[test]
    fn json_round_trip() {
        let spec = RecurrenceSpec::knight_2d();
        let json = serde_json::to_string(&spec).unwrap();
        let back: RecurrenceSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(spec, back);
        // the documented wire format parses
        let wire = r#"{
            "d": 3,
            "shifts": [
                {"h": [-2, 1, -1], "c": "1"},
                {"h": [1, -2, -1], "c": "1"}
            ],
            "start": [2, 2, 1],
            "initial": {"type": "point_mass", "point": [3, 3, 0], "value": "1"}
        }"#;
        let parsed: RecurrenceSpec = serde_json::from_str(wire).unwrap();
        assert_eq!(parsed.dim(), 3);
        assert!(parsed.zero_extension());
    }

    #[test]
    fn initial_condition_forms() {
        let c = InitialCondition::Constant { value: rat(7) };
        assert_eq!(c.value_at(&[0, 5]), rat(7));
        let p = InitialCondition::PointMass { point: vec![3, 3, 0], value: rat(1) };
        assert_eq!(p.value_at(&[3, 3, 0]), rat(1));
        assert_eq!(p.value_at(&[3, 2, 0]), rat(0));
        let t = InitialCondition::Table {
            entries: vec![TableEntry { n: vec![0, 0], value: rat(5) }],
            default: rat(2),
        };
        assert_eq!(t.value_at(&[0, 0]), rat(5));
        assert_eq!(t.value_at(&[1, 0]), rat(2));
    }
}
