//! Coefficient fields for polynomials and truncated series.
//!
//! The same series and reversion code runs over exact rationals (coefficient
//! generation, residual checks) and over floating point (evaluation). The
//! [`Scalar`] trait captures the field operations both modes need;
//! [`ComplexScalar`] adds the imaginary unit for the routes that pick up
//! factors of `i`.

use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A coefficient field: exact (`BigRational`, Gaussian rational) or floating
/// point (`f32`, `f64`, `Complex64`).
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// num/den as a field element; exact for rational scalars.
    fn from_ratio(num: i64, den: i64) -> Self;
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
}

impl Scalar for f32 {
    fn from_i64(n: i64) -> Self {
        n as f32
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f32 / den as f32
    }
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(num.into(), den.into())
    }
}

impl Scalar for Complex64 {
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
}

impl Scalar for Complex<BigRational> {
    fn from_i64(n: i64) -> Self {
        Complex::new(BigRational::from_i64(n), BigRational::zero())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(BigRational::from_ratio(num, den), BigRational::zero())
    }
}

/// A scalar containing the imaginary unit.
pub trait ComplexScalar: Scalar {
    /// The imaginary unit `i`.
    fn imag_unit() -> Self;
}

impl ComplexScalar for Complex64 {
    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }
}

impl ComplexScalar for Complex<BigRational> {
    fn imag_unit() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }
}
