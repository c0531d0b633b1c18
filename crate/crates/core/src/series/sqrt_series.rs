//! Series of the form `A(x) + √x·B(x)` with power-series components — the
//! shape of the two conjugate kernel roots. The pair is closed under ring
//! operations via
//! `(A₁+√x B₁)(A₂+√x B₂) = (A₁A₂ + x B₁B₂) + √x (A₁B₂ + A₂B₁)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::{SeriesError, USeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtSeries {
    even: USeries,
    odd: USeries,
}

impl SqrtSeries {
    pub fn new(even: USeries, odd: USeries) -> Self {
        SqrtSeries { even, odd }
    }

    /// Embed an ordinary power series (no `√x` part).
    pub fn from_even(even: USeries) -> Self {
        let order = even.order();
        SqrtSeries {
            even,
            odd: USeries::zero(order),
        }
    }

    /// `√x · odd(x)`.
    pub fn from_odd(odd: USeries) -> Self {
        let order = odd.order();
        SqrtSeries {
            even: USeries::zero(order),
            odd,
        }
    }

    pub fn even(&self) -> &USeries {
        &self.even
    }

    pub fn odd(&self) -> &USeries {
        &self.odd
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Valuation in half-integer units: exponent of the lowest term as a
    /// multiple of `1/2` (so `x^{k/2}` has valuation `k`). `None` when zero.
    pub fn valuation_half(&self) -> Option<usize> {
        let e = self.even.valuation().map(|v| 2 * v);
        let o = self.odd.valuation().map(|v| 2 * v + 1);
        match (e, o) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn add(&self, other: &SqrtSeries) -> SqrtSeries {
        SqrtSeries {
            even: &self.even + &other.even,
            odd: &self.odd + &other.odd,
        }
    }

    pub fn sub(&self, other: &SqrtSeries) -> SqrtSeries {
        SqrtSeries {
            even: &self.even - &other.even,
            odd: &self.odd - &other.odd,
        }
    }

    pub fn negate(&self) -> SqrtSeries {
        SqrtSeries {
            even: self.even.negate(),
            odd: self.odd.negate(),
        }
    }

    pub fn mul(&self, other: &SqrtSeries) -> SqrtSeries {
        let even = &(&self.even * &other.even) + &(&self.odd * &other.odd).mul_xpow(1);
        let odd = &(&self.even * &other.odd) + &(&self.odd * &other.even);
        SqrtSeries { even, odd }
    }

    pub fn mul_useries(&self, u: &USeries) -> SqrtSeries {
        SqrtSeries {
            even: &self.even * u,
            odd: &self.odd * u,
        }
    }

    pub fn scale(&self, factor: &BigRational) -> SqrtSeries {
        SqrtSeries {
            even: self.even.scale(factor),
            odd: self.odd.scale(factor),
        }
    }

    pub fn add_useries(&self, u: &USeries) -> SqrtSeries {
        SqrtSeries {
            even: &self.even + u,
            odd: self.odd.truncate(self.odd.order().min(u.order())),
        }
    }

    /// Conjugate `A − √x·B`.
    pub fn conjugate(&self) -> SqrtSeries {
        SqrtSeries {
            even: self.even.clone(),
            odd: self.odd.negate(),
        }
    }

    /// Multiplicative inverse via the conjugate:
    /// `(A + √x B)⁻¹ = (A − √x B) / (A² − x B²)`; needs `A(0) ≠ 0`.
    pub fn reciprocal(&self) -> Result<SqrtSeries, SeriesError> {
        let norm = &(&self.even * &self.even) - &(&self.odd * &self.odd).mul_xpow(1);
        let inv = norm.reciprocal()?;
        Ok(self.conjugate().mul_useries(&inv))
    }

    /// Apply a univariate series `f` to this value, which must have zero
    /// constant term. The result is valid through half-exponent
    /// `min(2·order+1, (ord(f)+1)·val_half − 1)`.
    pub fn apply_useries(f: &USeries, s: &SqrtSeries) -> Result<SqrtSeries, SeriesError> {
        let val = match s.valuation_half() {
            None => {
                return Ok(SqrtSeries::from_even(USeries::monomial(
                    0,
                    f.coeff(0).clone(),
                    s.even.order().min(s.odd.order()),
                )))
            }
            Some(0) => return Err(SeriesError::NonzeroInnerConstant),
            Some(v) => v,
        };
        let half_limit = (2 * s.even.order() + 1)
            .min(2 * s.odd.order() + 2)
            .min((f.order() + 1).saturating_mul(val) - 1);
        let even_order = half_limit / 2;
        let odd_order = half_limit.saturating_sub(1) / 2;
        let mut acc = SqrtSeries {
            even: USeries::zero(even_order),
            odd: USeries::zero(odd_order),
        };
        for k in (0..=f.order()).rev() {
            acc = acc.mul(s);
            acc = SqrtSeries {
                even: acc.even.truncate(acc.even.order().min(even_order)),
                odd: acc.odd.truncate(acc.odd.order().min(odd_order)),
            };
            acc = acc.add_useries(&USeries::monomial(0, f.coeff(k).clone(), even_order));
        }
        Ok(acc)
    }

    /// First differing term, reported as the doubled exponent (`x^{k/2}`).
    pub fn first_difference_half(&self, other: &SqrtSeries, upto_half: usize) -> Option<usize> {
        for h in 0..=upto_half {
            let (series_a, series_b, idx) = if h % 2 == 0 {
                (&self.even, &other.even, h / 2)
            } else {
                (&self.odd, &other.odd, (h - 1) / 2)
            };
            if series_a.coeff(idx) != series_b.coeff(idx) {
                return Some(h);
            }
        }
        None
    }
}

impl Add for &SqrtSeries {
    type Output = SqrtSeries;
    fn add(self, rhs: &SqrtSeries) -> SqrtSeries {
        SqrtSeries::add(self, rhs)
    }
}

impl Sub for &SqrtSeries {
    type Output = SqrtSeries;
    fn sub(self, rhs: &SqrtSeries) -> SqrtSeries {
        SqrtSeries::sub(self, rhs)
    }
}

impl Mul for &SqrtSeries {
    type Output = SqrtSeries;
    fn mul(self, rhs: &SqrtSeries) -> SqrtSeries {
        SqrtSeries::mul(self, rhs)
    }
}

impl Neg for &SqrtSeries {
    type Output = SqrtSeries;
    fn neg(self) -> SqrtSeries {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use num_traits::Zero;

    #[test]
    fn square_of_sqrt_x_is_x() {
        let s = SqrtSeries::from_odd(USeries::one(8)); // √x
        let sq = &s * &s;
        assert_eq!(*sq.even().coeff(1), rat(1));
        assert!(sq.odd().is_zero());
        assert!(sq.even().coeff(0).is_zero());
    }

    #[test]
    fn valuations_in_half_units() {
        let s = SqrtSeries::from_odd(USeries::x(4)); // √x · x = x^{3/2}
        assert_eq!(s.valuation_half(), Some(3));
        let t = SqrtSeries::from_even(USeries::x(4));
        assert_eq!(t.valuation_half(), Some(2));
        assert_eq!(SqrtSeries::from_even(USeries::zero(4)).valuation_half(), None);
    }

    #[test]
    fn reciprocal_round_trips() {
        // 1 - √x + x
        let s = SqrtSeries::new(USeries::from_integers(&[1, 1, 0, 0, 0, 0]), USeries::from_integers(&[-1, 0, 0, 0, 0, 0]));
        let inv = s.reciprocal().unwrap();
        let prod = &s * &inv;
        assert_eq!(*prod.even().coeff(0), rat(1));
        for k in 1..=prod.even().order() {
            assert!(prod.even().coeff(k).is_zero());
        }
        assert!(prod.odd().is_zero());
    }

    #[test]
    fn apply_useries_on_plain_square() {
        // f(u) = u² applied to √x gives x
        let f = USeries::from_integers(&[0, 0, 1]);
        let s = SqrtSeries::from_odd(USeries::one(6));
        let out = SqrtSeries::apply_useries(&f, &s).unwrap();
        assert_eq!(*out.even().coeff(1), rat(1));
        assert!(out.odd().is_zero());
    }

    #[test]
    fn apply_rejects_nonzero_constant() {
        let f = USeries::from_integers(&[1, 1]);
        let s = SqrtSeries::from_even(USeries::one(4));
        assert_eq!(
            SqrtSeries::apply_useries(&f, &s),
            Err(SeriesError::NonzeroInnerConstant)
        );
    }
}
