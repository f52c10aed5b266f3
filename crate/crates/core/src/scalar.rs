//! Numeric types that reports can be computed in.

use std::fmt::Debug;

use num_rational::Rational64;
use num_traits::{Num, ToPrimitive};

/// A field-like number that counts can be converted into.
///
/// Every ratio this crate reports (averages, percentages, precision,
/// recall, F1, kappa) is a quotient of integer counts, so `Num` plus an
/// embedding of counts is all that is needed. Floating point types give
/// the usual reports; [`Rational64`] gives exact values.
pub trait Scalar: Num + Copy + PartialOrd + Debug + Send + Sync + 'static {
    fn from_count(n: usize) -> Self;

    fn to_f64(self) -> f64;

    fn ratio(num: usize, den: usize) -> Self {
        Self::from_count(num) / Self::from_count(den)
    }

    /// `num / den`, or zero when the denominator is zero.
    fn ratio_or_zero(num: usize, den: usize) -> Self {
        if den == 0 {
            Self::zero()
        } else {
            Self::ratio(num, den)
        }
    }

    /// Harmonic mean, zero when both inputs are zero.
    fn harmonic_mean(a: Self, b: Self) -> Self {
        let sum = a + b;
        if sum == Self::zero() {
            Self::zero()
        } else {
            (Self::one() + Self::one()) * a * b / sum
        }
    }

    fn percent(num: usize, den: usize) -> Self {
        Self::ratio_or_zero(num, den) * Self::from_count(100)
    }
}

impl Scalar for f64 {
    fn from_count(n: usize) -> Self {
        n as f64
    }

    fn to_f64(self) -> f64 {
        self
    }
}

impl Scalar for f32 {
    fn from_count(n: usize) -> Self {
        n as f32
    }

    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Scalar for Rational64 {
    fn from_count(n: usize) -> Self {
        Rational64::from_integer(n as i64)
    }

    fn to_f64(self) -> f64 {
        ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
}
