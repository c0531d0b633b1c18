//! Small exact-arithmetic helpers shared across the crate.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // exact at every step: C(n-k+i+1, i+1) divides the running product
        acc = acc * BigUint::from(n - k + i + 1) / BigUint::from(i + 1);
    }
    acc
}

/// Exact factorial `n!`.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// Rational from an integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `num/den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Natural log of a positive big integer, robust to values beyond f64 range.
pub fn big_ln(value: &BigUint) -> f64 {
    assert!(!value.is_zero(), "ln of zero");
    let bits = value.bits();
    if bits <= 64 {
        return (value.to_u64().unwrap() as f64).ln();
    }
    // value = top * 2^shift with top holding the leading 64 bits
    let shift = bits - 64;
    let top = (value >> shift).to_u64().unwrap() as f64;
    top.ln() + (shift as f64) * std::f64::consts::LN_2
}
