//! The three roots of `x³ + y³ = xy` as exact series, and the bottom-row
//! generating function built by iterating the kernel equation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{SqrtSeries, USeries};
use crate::numeric::{binomial, factorial, ratio};

/// Branch labels for the kernel roots. `Xi0` is the power-series root; the
/// other two are conjugate in `√x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelBranch {
    Xi0,
    Xi1,
    Xi2,
}

/// The unique power-series root `ξ` of `xξ − x³ − ξ³ = 0`: by Lagrange
/// inversion, the coefficient of `x^{3m+2}` is `C(3m, m) / (2m+1)` and all
/// other coefficients vanish.
pub fn xi_series(order: usize) -> USeries {
    assert!(order >= 2, "xi starts at x^2");
    let mut s = USeries::zero(order);
    let mut m = 0u64;
    loop {
        let exp = 3 * m as usize + 2;
        if exp > order {
            break;
        }
        let c = BigRational::new(
            BigInt::from(binomial(3 * m, m)),
            BigInt::from(2 * m + 1),
        );
        s = &s + &USeries::monomial(exp, c, order);
        m += 1;
    }
    s
}

/// The even companion series
/// `ψ = 1 − Σ_{m≥1} m!(6m)! / ((6m−1)(2m)!²(3m)!) · x^{3m}/16^m`.
pub fn psi_series(order: usize) -> USeries {
    let mut s = USeries::monomial(0, BigRational::one(), order);
    let mut m = 1u64;
    loop {
        let exp = 3 * m as usize;
        if exp > order {
            break;
        }
        let numer = factorial(m) * factorial(6 * m);
        let two_m = factorial(2 * m);
        let denom = BigInt::from(6 * m - 1)
            * BigInt::from(&two_m * &two_m)
            * BigInt::from(factorial(3 * m))
            * BigInt::from(16u32).pow(m as u32);
        let c = -BigRational::new(BigInt::from(numer), denom);
        s = &s + &USeries::monomial(exp, c, order);
        m += 1;
    }
    s
}

/// Half the power-series root: the even part shared by the two conjugate
/// roots (with opposite sign).
pub fn phi_series(order: usize) -> USeries {
    xi_series(order).scale(&ratio(1, 2))
}

/// One of the three kernel roots as an `A(x) + √x·B(x)` value:
/// `ξ₀ = ξ`, `ξ₁ = √x·ψ − ξ/2`, `ξ₂ = −√x·ψ − ξ/2`.
pub fn kernel_root_series(branch: KernelBranch, order: usize) -> SqrtSeries {
    match branch {
        KernelBranch::Xi0 => SqrtSeries::from_even(xi_series(order)),
        KernelBranch::Xi1 => SqrtSeries::new(phi_series(order).negate(), psi_series(order)),
        KernelBranch::Xi2 => {
            SqrtSeries::new(phi_series(order).negate(), psi_series(order).negate())
        }
    }
}

/// The bottom-row generating function obtained by iterating the kernel
/// equation: `G(x) = Σ_{i≥0} (−1)^i (ξ^{(i)}(x) ξ^{(i+1)}(x))²` where
/// `ξ^{(i)}` is the i-th iterate of `ξ` (and `ξ^{(0)} = x`). Iterates double
/// their valuation, so the sum is finite at any truncation order.
pub fn g_series_iterated(order: usize) -> USeries {
    assert!(order >= 6, "G starts at x^6");
    let xi = xi_series(order);
    let mut acc = USeries::zero(order);
    let mut current = USeries::x(order); // ξ^{(0)}
    let mut i = 0usize;
    loop {
        let next = xi.compose(&current).expect("iterates have zero constant term");
        let term_val = match (current.valuation(), next.valuation()) {
            (Some(a), Some(b)) => 2 * (a + b),
            _ => break,
        };
        if term_val > order {
            break;
        }
        let prod = &current * &next;
        let term = clip(&(&prod * &prod), order);
        acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
        current = next;
        i += 1;
    }
    acc
}

/// Truncate to `order` when the series is known further; no-op otherwise.
fn clip(s: &USeries, order: usize) -> USeries {
    s.truncate(s.order().min(order))
}
