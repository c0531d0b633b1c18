//! Univariate truncated power series over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::SeriesError;

/// A power series known modulo `x^{order+1}`: exactly `order + 1` exact
/// rational coefficients. Arithmetic tracks how far the result stays valid,
/// taking the minimum of the operands' validity (compositions tighten it
/// according to the inner valuation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeries {
    coeffs: Vec<BigRational>,
}

impl USeries {
    /// The zero series known through `x^order`.
    pub fn zero(order: usize) -> Self {
        USeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// The constant 1 through `x^order`.
    pub fn one(order: usize) -> Self {
        Self::monomial(0, BigRational::one(), order)
    }

    /// The identity series `x` through `x^order`.
    pub fn x(order: usize) -> Self {
        Self::monomial(1, BigRational::one(), order)
    }

    /// `coeff · x^exp` through `x^order` (zero if `exp > order`).
    pub fn monomial(exp: usize, coeff: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = coeff;
        }
        s
    }

    /// Series with the given coefficients; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        USeries { coeffs }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Self::from_coeffs(
            values
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        )
    }

    /// Highest exponent with a known coefficient.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`. Panics if `k` exceeds the known order.
    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Exponent of the lowest nonzero coefficient; `None` for a zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn valuation_or_past_order(&self) -> usize {
        self.valuation().unwrap_or(self.coeffs.len())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Restrict to a smaller known order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend knowledge by truncating");
        USeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        USeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiply by `x^k`; validity extends accordingly.
    pub fn mul_xpow(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        USeries { coeffs }
    }

    /// Divide by `x^k`, requiring valuation at least `k`.
    pub fn div_xpow(&self, k: usize) -> Result<Self, SeriesError> {
        if k == 0 {
            return Ok(self.clone());
        }
        let val = self.valuation_or_past_order();
        if val < k {
            return Err(SeriesError::InsufficientValuation {
                power: k,
                valuation: val,
            });
        }
        if k > self.order() {
            // no known coefficient would remain
            return Err(SeriesError::InsufficientOrder {
                needed: k,
                have: self.order(),
            });
        }
        Ok(USeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    fn zip_with(&self, other: &USeries, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> USeries {
        let order = self.order().min(other.order());
        USeries {
            coeffs: (0..=order)
                .map(|k| f(&self.coeffs[k], &other.coeffs[k]))
                .collect(),
        }
    }

    pub fn add(&self, other: &USeries) -> USeries {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &USeries) -> USeries {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn negate(&self) -> USeries {
        USeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Product. The result is valid through
    /// `min(ord(a) + val(b), ord(b) + val(a))`: the unknown tail of one
    /// factor enters only at its partner's valuation.
    pub fn mul(&self, other: &USeries) -> USeries {
        let order = (self.order() + other.valuation_or_past_order())
            .min(other.order() + self.valuation_or_past_order());
        let coeffs = mul_mod(&self.coeffs, &other.coeffs, order);
        USeries { coeffs }
    }

    /// Composition `self ∘ inner`; the inner series must have zero constant
    /// term. Valid through `min(ord(inner), (ord(self)+1)·val(inner) − 1)`.
    pub fn compose(&self, inner: &USeries) -> Result<USeries, SeriesError> {
        let val = match inner.valuation() {
            None => {
                // inner is zero as far as known; only the constant term survives
                return Ok(USeries::monomial(0, self.coeffs[0].clone(), inner.order()));
            }
            Some(0) => return Err(SeriesError::NonzeroInnerConstant),
            Some(v) => v,
        };
        let order = inner
            .order()
            .min((self.order() + 1).saturating_mul(val) - 1);
        let mut acc = vec![BigRational::zero(); order + 1];
        // Horner from the top coefficient down
        for k in (0..=self.order()).rev() {
            acc = mul_mod(&acc, &inner.coeffs, order);
            acc[0] += &self.coeffs[k];
        }
        Ok(USeries { coeffs: acc })
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn reciprocal(&self) -> Result<USeries, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let order = self.order();
        let mut inv = vec![BigRational::zero(); order + 1];
        let lead = self.coeffs[0].recip();
        inv[0] = lead.clone();
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &inv[n - k];
            }
            inv[n] = -acc * &lead;
        }
        Ok(USeries { coeffs: inv })
    }

    /// `√(1 − u)` for a series `u` with zero constant term, as a power
    /// series with constant term 1.
    pub fn sqrt1m(u: &USeries) -> Result<USeries, SeriesError> {
        if !u.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroSqrtArgument);
        }
        let order = u.order();
        let mut y = vec![BigRational::zero(); order + 1];
        y[0] = BigRational::one();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        for n in 1..=order {
            // square both sides of y² = 1 − u and solve for y_n
            let mut acc = BigRational::zero();
            for i in 1..n {
                acc += &y[i] * &y[n - i];
            }
            y[n] = (-&u.coeffs[n] - acc) * &half;
        }
        Ok(USeries { coeffs: y })
    }

    /// First exponent `≤ upto` where the two series disagree.
    pub fn first_difference(&self, other: &USeries, upto: usize) -> Option<usize> {
        (0..=upto).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    /// True when all coefficients are `≥ 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// Plain truncated product of coefficient slices, through `x^order`.
pub(super) fn mul_mod(a: &[BigRational], b: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

impl fmt::Display for USeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add for &USeries {
    type Output = USeries;
    fn add(self, rhs: &USeries) -> USeries {
        USeries::add(self, rhs)
    }
}

impl Sub for &USeries {
    type Output = USeries;
    fn sub(self, rhs: &USeries) -> USeries {
        USeries::sub(self, rhs)
    }
}

impl Mul for &USeries {
    type Output = USeries;
    fn mul(self, rhs: &USeries) -> USeries {
        USeries::mul(self, rhs)
    }
}

impl Neg for &USeries {
    type Output = USeries;
    fn neg(self) -> USeries {
        self.negate()
    }
}
