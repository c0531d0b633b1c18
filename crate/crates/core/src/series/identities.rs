//! Term-by-term verification of the functional equations. Every check takes
//! its ingredient series as arguments so tests can inject faults; the
//! [`verify_identity`] wrapper builds the unperturbed ingredients from the
//! enumeration and recurrence engines, never from the identity under test.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{kernel_root_series, xi_series, BivSeries, KernelBranch, SeriesError, SqrtSeries, USeries};
use crate::enumerate::count_quadrant;
use crate::numeric::rat;
use crate::recurrence::f_sequence;
use crate::stepset::StepSet;

/// The verifiable functional equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `G(x) + G(ξ(x)) = x²ξ(x)²` with `G` from the walk counts.
    Main,
    /// `(xy − x³ − y³) Q(x,y) = x²y² − G(x) − G(y)`.
    KnightKernel,
    /// `Σ_n Q_{n,n} t^{2n+2} = (t⁴ − 2S(t³U(t))) / √(1−4t²)`.
    Diagonal,
    /// `F(x) + F(ξᵢ(x)) = R(x, ξᵢ(x))` for all three kernel roots.
    Main2,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identity::Main => write!(f, "main"),
            Identity::KnightKernel => write!(f, "knight-kernel"),
            Identity::Diagonal => write!(f, "diagonal"),
            Identity::Main2 => write!(f, "main2"),
        }
    }
}

/// Location of the first coefficient mismatch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Term {
    /// `x^k` (or `t^k` for the diagonal identity).
    Power(usize),
    /// `x^{h/2}`, exponent stored doubled.
    HalfPower(usize),
    /// `x^i y^j`.
    Monomial(usize, usize),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Term::Power(k) => write!(f, "x^{k}"),
            Term::HalfPower(h) if h % 2 == 0 => write!(f, "x^{}", h / 2),
            Term::HalfPower(h) => write!(f, "x^({h}/2)"),
            Term::Monomial(i, j) => write!(f, "x^{i}*y^{j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub holds: bool,
    pub first_failure: Option<Term>,
}

impl IdentityReport {
    fn ok() -> Self {
        IdentityReport {
            holds: true,
            first_failure: None,
        }
    }

    fn fail(term: Term) -> Self {
        IdentityReport {
            holds: false,
            first_failure: Some(term),
        }
    }
}

fn require_order(have: usize, needed: usize) -> Result<(), SeriesError> {
    if have < needed {
        Err(SeriesError::InsufficientOrder { needed, have })
    } else {
        Ok(())
    }
}

fn useries_from_biguints(values: &[BigUint], order: usize) -> USeries {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for (k, v) in values.iter().enumerate().take(order + 1) {
        coeffs[k] = BigRational::from_integer(BigInt::from(v.clone()));
    }
    USeries::from_coeffs(coeffs)
}

/// `G(x) + G(ξ(x)) = x²ξ(x)²` compared through `x^order`.
pub fn check_main(g: &USeries, xi: &USeries, order: usize) -> Result<IdentityReport, SeriesError> {
    require_order(g.order(), order)?;
    require_order(xi.order(), order)?;
    let lhs = g.add(&g.compose(xi)?);
    let rhs = (xi * xi).mul_xpow(2);
    require_order(lhs.order(), order)?;
    require_order(rhs.order(), order)?;
    match lhs.first_difference(&rhs, order) {
        None => Ok(IdentityReport::ok()),
        Some(k) => Ok(IdentityReport::fail(Term::Power(k))),
    }
}

/// `(xy − x³ − y³) Q(x,y) = x²y² − G(x) − G(y)` through total degree `degree`.
pub fn check_knight_kernel(
    q: &BivSeries,
    g: &USeries,
    degree: usize,
) -> Result<IdentityReport, SeriesError> {
    require_order(q.degree(), degree)?;
    require_order(g.order(), degree)?;
    let kernel = BivSeries::monomial(1, 1, rat(1), degree + 1)
        .sub(&BivSeries::monomial(3, 0, rat(1), degree + 1))
        .sub(&BivSeries::monomial(0, 3, rat(1), degree + 1));
    let lhs = kernel.mul(q);
    let rhs = BivSeries::monomial(2, 2, rat(1), degree)
        .sub(&BivSeries::from_x_series(g, degree))
        .sub(&BivSeries::from_y_series(g, degree));
    require_order(lhs.degree(), degree)?;
    match lhs.first_difference(&rhs, degree) {
        None => Ok(IdentityReport::ok()),
        Some((i, j)) => Ok(IdentityReport::fail(Term::Monomial(i, j))),
    }
}

/// Diagonal extraction: the left side is the diagonal generating function
/// `Σ_n Q_{n,n} t^{2n+2}`; the right side is assembled from `U(t)`,
/// `1/√(1−4t²)`, and the reindexed axis series `S`.
pub fn check_diagonal(
    diagonal_gf: &USeries,
    s: &USeries,
    order: usize,
) -> Result<IdentityReport, SeriesError> {
    require_order(diagonal_gf.order(), order)?;
    let sq = USeries::sqrt1m(&USeries::monomial(2, rat(4), order))?;
    let inv_sq = sq.reciprocal()?;
    // U(t) = (1 − √(1−4t²)) / (2t)
    let u = USeries::one(order)
        .sub(&sq)
        .div_xpow(1)?
        .scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
    let inner = u.mul_xpow(3); // t³ U(t), valuation 4
    let s_of = s.compose(&inner)?;
    require_order(s_of.order(), order)?;
    let rhs_core = USeries::monomial(4, rat(1), order).sub(&s_of.scale(&rat(2)));
    let rhs = inv_sq.mul(&rhs_core);
    require_order(rhs.order(), order)?;
    match diagonal_gf.first_difference(&rhs, order) {
        None => Ok(IdentityReport::ok()),
        Some(k) => Ok(IdentityReport::fail(Term::Power(k))),
    }
}

fn r_along_xi0(xi: &USeries, order: usize) -> Result<USeries, SeriesError> {
    // R(x, ξ₀) = x ξ₀ ((1+ξ₀)/(1−x) + (1+x)/(1−ξ₀)) in plain power series
    let one = USeries::one(order);
    let x = USeries::x(order);
    let inv_1mx = one.sub(&x).reciprocal()?;
    let inv_1mxi = one.sub(xi).reciprocal()?;
    let sum = one.add(xi).mul(&inv_1mx).add(&one.add(&x).mul(&inv_1mxi));
    Ok(xi.mul_xpow(1).mul(&sum))
}

/// `F(x) + F(ξ₀(x)) = R(x, ξ₀(x))` in power-series arithmetic.
pub fn check_main2_root0(
    f: &USeries,
    xi: &USeries,
    order: usize,
) -> Result<IdentityReport, SeriesError> {
    require_order(f.order(), order)?;
    require_order(xi.order(), order)?;
    let lhs = f.add(&f.compose(xi)?);
    let rhs = r_along_xi0(xi, order)?;
    require_order(lhs.order(), order)?;
    require_order(rhs.order(), order)?;
    match lhs.first_difference(&rhs, order) {
        None => Ok(IdentityReport::ok()),
        Some(k) => Ok(IdentityReport::fail(Term::Power(k))),
    }
}

/// `F(x) + F(ξᵢ(x)) = R(x, ξᵢ(x))` for a conjugate root, carried out in
/// `A + √x·B` arithmetic and compared through half-exponent `2·order + 1`.
/// `F` must be known through `x^{2·order+1}` because the root starts at `√x`.
pub fn check_main2_conjugate(
    f: &USeries,
    branch: KernelBranch,
    order: usize,
) -> Result<IdentityReport, SeriesError> {
    assert!(
        matches!(branch, KernelBranch::Xi1 | KernelBranch::Xi2),
        "conjugate check applies to Xi1/Xi2"
    );
    require_order(f.order(), 2 * order + 1)?;
    let root = kernel_root_series(branch, order);
    let f_of_root = SqrtSeries::apply_useries(f, &root)?;
    let lhs = f_of_root.add_useries(f);
    let one = USeries::one(order);
    let x = USeries::x(order);
    let inv_1mx = one.sub(&x).reciprocal()?;
    let term1 = root.add_useries(&one).mul_useries(&inv_1mx);
    let inv_1mroot = SqrtSeries::from_even(one.clone()).sub(&root).reciprocal()?;
    let term2 = inv_1mroot.mul_useries(&one.add(&x));
    let rhs = root.mul_useries(&x).mul(&term1.add(&term2));
    let upto = 2 * order + 1;
    require_order(2 * lhs.even().order() + 1, upto)?;
    require_order(2 * lhs.odd().order() + 2, upto)?;
    require_order(2 * rhs.even().order() + 1, upto)?;
    require_order(2 * rhs.odd().order() + 2, upto)?;
    match lhs.first_difference_half(&rhs, upto) {
        None => Ok(IdentityReport::ok()),
        Some(h) => Ok(IdentityReport::fail(Term::HalfPower(h))),
    }
}

/// Bottom-row generating function `G` from the dynamic-programming counts:
/// `g_{i+3}` is the number of knight walks ending at `(i, 0)`.
pub fn knight_axis_g(order: usize) -> USeries {
    let grid = count_quadrant(&StepSet::knight(), (1, 1), order).expect("start in quadrant");
    useries_from_biguints(&grid.axis_sequence(), order)
}

/// Aggregated knight counts as a bivariate series through total degree `d`.
pub fn knight_q_biv(d: usize) -> BivSeries {
    let grid = count_quadrant(&StepSet::knight(), (1, 1), d).expect("start in quadrant");
    BivSeries::from_terms(
        grid.aggregated().iter().filter_map(|(&(i, j), c)| {
            ((i + j) as usize <= d)
                .then(|| ((i as usize, j as usize), BigRational::from_integer(BigInt::from(c.clone()))))
        }),
        d,
    )
}

/// Diagonal generating function `Σ_n Q_{n,n} t^{2n+2}` from the counts.
pub fn knight_diagonal_gf(order: usize) -> USeries {
    let grid = count_quadrant(&StepSet::knight(), (1, 1), order).expect("start in quadrant");
    let diag = grid.diagonal_sequence();
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for (n, v) in diag.iter().enumerate() {
        let exp = 2 * n + 2;
        if exp <= order {
            coeffs[exp] = BigRational::from_integer(BigInt::from(v.clone()));
        }
    }
    USeries::from_coeffs(coeffs)
}

/// The reindexed axis series `S(z) = Σ_i Q_{3i,0} z^{i+1}` (so `S(z³) = G(z)`).
pub fn knight_s_series(order: usize) -> USeries {
    let max_axis = 3 * order; // S through z^order reads Q_{3(order-1),0}
    let grid = count_quadrant(&StepSet::knight(), (1, 1), max_axis).expect("start in quadrant");
    let g = grid.axis_sequence();
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let g_index = 3 * (k - 1) + 3; // G-coefficient of x^{3(k-1)+3} is Q_{3(k-1),0}
        if g_index < g.len() {
            *slot = BigRational::from_integer(BigInt::from(g[g_index].clone()));
        }
    }
    USeries::from_coeffs(coeffs)
}

/// `F(x)` from the recurrence engine, as a series through `x^order`.
pub fn f_series(order: usize) -> USeries {
    useries_from_biguints(&f_sequence(order), order)
}

/// Build all ingredients from the enumeration/recurrence engines and check
/// the requested identity through the given order (total degree for
/// [`Identity::KnightKernel`]). [`Identity::Main2`] checks the power-series
/// root and both conjugate roots at this order.
pub fn verify_identity(id: Identity, order: usize) -> Result<IdentityReport, SeriesError> {
    match id {
        Identity::Main => {
            let g = knight_axis_g(order);
            let xi = xi_series(order.max(2));
            check_main(&g, &xi, order)
        }
        Identity::KnightKernel => {
            let q = knight_q_biv(order);
            let g = knight_axis_g(order);
            check_knight_kernel(&q, &g, order)
        }
        Identity::Diagonal => {
            let diag = knight_diagonal_gf(order);
            let s = knight_s_series(order.max(4));
            check_diagonal(&diag, &s, order)
        }
        Identity::Main2 => {
            let f = f_series(2 * order + 1);
            let xi = xi_series(order.max(2));
            let zero_root = check_main2_root0(&f, &xi, order)?;
            if !zero_root.holds {
                return Ok(zero_root);
            }
            for branch in [KernelBranch::Xi1, KernelBranch::Xi2] {
                let report = check_main2_conjugate(&f, branch, order)?;
                if !report.holds {
                    return Ok(report);
                }
            }
            Ok(IdentityReport::ok())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn main_identity_holds_at_low_order() {
        let report = verify_identity(Identity::Main, 18).unwrap();
        assert!(report.holds, "failure at {:?}", report.first_failure);
    }

    #[test]
    fn main_identity_detects_injected_fault() {
        let order = 18;
        let g = knight_axis_g(order).add(&USeries::monomial(9, rat(1), order));
        let xi = xi_series(order);
        let report = check_main(&g, &xi, order).unwrap();
        assert!(!report.holds);
        assert_eq!(report.first_failure, Some(Term::Power(9)));
    }

    #[test]
    fn knight_kernel_holds_at_low_degree() {
        let report = verify_identity(Identity::KnightKernel, 10).unwrap();
        assert!(report.holds, "failure at {:?}", report.first_failure);
    }

    #[test]
    fn diagonal_low_order_coefficients() {
        let lhs = knight_diagonal_gf(12);
        for (exp, v) in [(4usize, 1i64), (6, 2), (8, 4), (10, 12), (12, 36)] {
            assert_eq!(*lhs.coeff(exp), rat(v), "diagonal gf at t^{exp}");
        }
        let report = verify_identity(Identity::Diagonal, 12).unwrap();
        assert!(report.holds, "failure at {:?}", report.first_failure);
    }

    #[test]
    fn insufficient_order_is_an_error_not_a_verdict() {
        let g = knight_axis_g(10);
        let xi = xi_series(30);
        assert_eq!(
            check_main(&g, &xi, 30),
            Err(SeriesError::InsufficientOrder {
                needed: 30,
                have: 10
            })
        );
    }

    #[test]
    fn term_display_forms() {
        assert_eq!(Term::Power(9).to_string(), "x^9");
        assert_eq!(Term::HalfPower(7).to_string(), "x^(7/2)");
        assert_eq!(Term::HalfPower(8).to_string(), "x^4");
        assert_eq!(Term::Monomial(5, 2).to_string(), "x^5*y^2");
    }
}
