//! Bivariate series truncated by total degree.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::USeries;

/// A bivariate series whose coefficients are known for all monomials
/// `x^i y^j` with `i + j ≤ degree`. Truncation is by total degree because
/// the kernel equations couple the two variables' degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivSeries {
    degree: usize,
    coeffs: BTreeMap<(usize, usize), BigRational>,
}

impl BivSeries {
    pub fn zero(degree: usize) -> Self {
        BivSeries {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// `coeff · x^i y^j`; terms beyond the total degree are dropped.
    pub fn monomial(i: usize, j: usize, coeff: BigRational, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.insert(i, j, coeff);
        s
    }

    fn insert(&mut self, i: usize, j: usize, coeff: BigRational) {
        if i + j <= self.degree && !coeff.is_zero() {
            self.coeffs.insert((i, j), coeff);
        }
    }

    /// Collect `((i, j), coeff)` terms; entries beyond `degree` are dropped.
    pub fn from_terms(
        terms: impl IntoIterator<Item = ((usize, usize), BigRational)>,
        degree: usize,
    ) -> Self {
        let mut s = Self::zero(degree);
        for ((i, j), c) in terms {
            s.add_to(i, j, &c);
        }
        s
    }

    fn add_to(&mut self, i: usize, j: usize, coeff: &BigRational) {
        if i + j > self.degree || coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((i, j)).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient of `x^i y^j`. Panics past the known total degree.
    pub fn coeff(&self, i: usize, j: usize) -> BigRational {
        assert!(i + j <= self.degree, "coefficient beyond known total degree");
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigRational)> {
        self.coeffs.iter()
    }

    /// Lowest total degree among nonzero terms (`degree + 1` when zero).
    fn valuation_or_past(&self) -> usize {
        self.coeffs
            .keys()
            .map(|&(i, j)| i + j)
            .min()
            .unwrap_or(self.degree + 1)
    }

    /// Embed a univariate series as a series in `x`.
    pub fn from_x_series(u: &USeries, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        for k in 0..=u.order().min(degree) {
            s.insert(k, 0, u.coeff(k).clone());
        }
        s
    }

    /// Embed a univariate series as a series in `y`.
    pub fn from_y_series(u: &USeries, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        for k in 0..=u.order().min(degree) {
            s.insert(0, k, u.coeff(k).clone());
        }
        s
    }

    pub fn add(&self, other: &BivSeries) -> BivSeries {
        let degree = self.degree.min(other.degree);
        let mut out = BivSeries::zero(degree);
        for (&(i, j), c) in &self.coeffs {
            out.add_to(i, j, c);
        }
        for (&(i, j), c) in &other.coeffs {
            out.add_to(i, j, c);
        }
        out
    }

    pub fn sub(&self, other: &BivSeries) -> BivSeries {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> BivSeries {
        BivSeries {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&k, c)| (k, -c.clone()))
                .collect(),
        }
    }

    /// Product, valid through total degree
    /// `min(deg(a) + val(b), deg(b) + val(a))`.
    pub fn mul(&self, other: &BivSeries) -> BivSeries {
        let degree = (self.degree + other.valuation_or_past())
            .min(other.degree + self.valuation_or_past());
        let mut out = BivSeries::zero(degree);
        for (&(i1, j1), c1) in &self.coeffs {
            for (&(i2, j2), c2) in &other.coeffs {
                if i1 + j1 + i2 + j2 <= degree {
                    out.add_to(i1 + i2, j1 + j2, &(c1 * c2));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> BivSeries {
        BivSeries {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// First monomial where the two sides differ, scanning by total degree
    /// and then by `x`-exponent, up to `upto` total degree.
    pub fn first_difference(&self, other: &BivSeries, upto: usize) -> Option<(usize, usize)> {
        for d in 0..=upto {
            for i in 0..=d {
                let j = d - i;
                if self.coeff(i, j) != other.coeff(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// The rational kernel right-hand side
/// `R(x,y) = xy ((1+y)/(1−x) + (1+x)/(1−y))` expanded to total degree `d`.
pub fn r_series(d: usize) -> BivSeries {
    assert!(d >= 2, "R starts at total degree 2");
    let geo = USeries::from_coeffs(vec![BigRational::one(); d + 1]); // 1/(1-t)
    let one_plus = |deg: usize| {
        let mut s = BivSeries::zero(deg);
        s.insert(0, 0, BigRational::one());
        s
    };
    let geo_x = BivSeries::from_x_series(&geo, d);
    let geo_y = BivSeries::from_y_series(&geo, d);
    let mut one_plus_y = one_plus(d);
    one_plus_y.insert(0, 1, BigRational::one());
    let mut one_plus_x = one_plus(d);
    one_plus_x.insert(1, 0, BigRational::one());
    let sum = one_plus_y.mul(&geo_x).add(&one_plus_x.mul(&geo_y));
    BivSeries::monomial(1, 1, BigRational::one(), d + 2).mul(&sum)
}
