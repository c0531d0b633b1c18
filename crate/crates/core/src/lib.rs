//! Exact-arithmetic toolkit for planar lattice walks confined to a quadrant.
//!
//! The crate provides:
//!
//! - [`stepset`]: step sets over `ℤ²` and the sufficient D-finiteness
//!   criterion (x-axis symmetry plus small height variation);
//! - [`enumerate`]: big-integer dynamic programming for quadrant and
//!   half-plane walk counts, with axis / diagonal / length extractions;
//! - [`bijection`]: the step-flipping correspondence between quadrant walks
//!   that touch the x-axis and half-plane walks ending at level 0 or −1;
//! - [`series`]: truncated formal power series over exact rationals
//!   (univariate, bivariate, and `A(x)+√x·B(x)` forms), the three kernel
//!   roots of `x³+y³=xy`, and term-by-term verification of the functional
//!   equations tying them to the walk counts;
//! - [`analytic`]: floating-point evaluation of the kernel branches with
//!   consistent labels, singularity classification, and the numeric
//!   singularity-chain and radius checks;
//! - [`recurrence`]: multidimensional linear recurrences with constant
//!   coefficients, validated by an exact-rational separating functional.
//!
//! Everything combinatorial is exact (big integers / big rationals); floats
//! appear only in [`analytic`].

pub mod analytic;
pub mod bijection;
pub mod enumerate;
pub mod numeric;
pub mod recurrence;
pub mod series;
pub mod stepset;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
