//! Truncated formal power series with exact rational coefficients, the
//! kernel-root series of `x³ + y³ = xy`, and term-by-term verification of
//! the functional equations relating them to walk counts.
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals
//! kept normalized (reduced, positive denominator), and no floating point
//! is used anywhere in this module.

mod biv_series;
mod identities;
mod kernel_roots;
mod sqrt_series;
mod useries;

pub use biv_series::{r_series, BivSeries};
pub use identities::{
    check_diagonal, check_knight_kernel, check_main, check_main2_conjugate, check_main2_root0,
    f_series, knight_axis_g, knight_diagonal_gf, knight_q_biv, knight_s_series, verify_identity,
    Identity, IdentityReport, Term,
};
pub use kernel_roots::{
    g_series_iterated, kernel_root_series, phi_series, psi_series, xi_series, KernelBranch,
};
pub use sqrt_series::SqrtSeries;
pub use useries::USeries;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,
    #[error("square root argument must have zero constant term")]
    NonzeroSqrtArgument,
    #[error("division by x^{power} needs valuation >= {power}, found {valuation}")]
    InsufficientValuation { power: usize, valuation: usize },
    #[error("identity check to order {needed} requires series of order >= {needed}, have {have}")]
    InsufficientOrder { needed: usize, have: usize },
}
