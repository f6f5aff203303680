//! Scalar tower: exact arbitrary-precision rationals and 64-bit floats
//! behind one trait, so every functional can run in either mode.
//!
//! Exact identities (recursion checks, difference-equation residuals,
//! re-verification of float violation candidates) instantiate with [`Rat`];
//! grid scans and zero refinement instantiate with `f64`. Rational
//! arithmetic never rounds; float comparisons in the verification drivers
//! always go through an explicit tolerance parameter.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// Field operations shared by the exact and float scalar modes.
///
/// Implementations must make `EXACT` truthful: when it is `true`, every
/// arithmetic operation is required to be rounding-free.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Whether arithmetic in this mode is exact (no rounding ever).
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    /// The exact value `num/den`. Panics if `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;
    /// Nearest-float image of the value (lossy in rational mode).
    fn to_f64(&self) -> f64;
    /// False only for float non-finite values; rationals are always finite.
    fn is_finite(&self) -> bool;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn from_int(v: i64) -> Self {
        Rat::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rat::new(BigInt::from(num), BigInt::from(den))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn is_finite(&self) -> bool {
        true
    }
}

/// `n!` in the requested scalar mode.
pub fn factorial<S: Scalar>(n: u32) -> S {
    (1..=i64::from(n)).fold(S::one(), |acc, i| acc * S::from_int(i))
}

/// Binomial coefficient `C(n, k)` in the requested scalar mode.
///
/// Computed multiplicatively; exact in rational mode.
pub fn binomial<S: Scalar>(n: u64, k: u64) -> S {
    if k > n {
        return S::zero();
    }
    let k = k.min(n - k);
    let mut acc = S::one();
    for i in 0..k {
        acc = acc * S::from_int((n - i) as i64) / S::from_int((i + 1) as i64);
    }
    acc
}

/// Exact rational image of a float (every finite `f64` is a rational).
///
/// Panics on NaN or infinities; violation candidates re-verified in exact
/// mode must come from finite float computations.
pub fn rat_from_f64(x: f64) -> Rat {
    Rat::from_float(x).expect("non-finite float has no rational image")
}
