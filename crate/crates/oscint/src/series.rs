//! Truncated power series with an explicit truncation order.
//!
//! A `Series` of order T knows its coefficients up to x^T; anything beyond is
//! unknown, not zero. Operations propagate the valid order pessimistically
//! (min of the inputs, shifted by differentiation/integration).

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use num_complex::Complex64;
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct Series<T: Scalar> {
    coeffs: Vec<T>, // len <= order + 1
    order: usize,
}

impl<T: Scalar> PartialEq for Series<T> {
    /// Same truncation order and coefficient-wise equal; absent trailing
    /// coefficients count as zero.
    fn eq(&self, other: &Self) -> bool {
        if self.order != other.order {
            return false;
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|k| {
            self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
                == other.coeffs.get(k).cloned().unwrap_or_else(T::zero)
        })
    }
}

impl<T: Scalar> Series<T> {
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.truncate(order + 1);
        Series { coeffs, order }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn from_polynomial(p: &Polynomial<T>, order: usize) -> Self {
        Series::new(p.coeffs().to_vec(), order)
    }

    /// Truncation order T: coefficients beyond T are unknown.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of x^k for k ≤ order.
    pub fn coeff(&self, k: usize) -> T {
        debug_assert!(k <= self.order, "coefficient index beyond truncation order");
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series::new(self.coeffs.clone(), order.min(self.order))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Series<U> {
        Series::new(self.coeffs.iter().map(f).collect(), self.order)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let n = self.coeffs.len().max(rhs.coeffs.len()).min(order + 1);
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(
                self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
                    + rhs.coeffs.get(i).cloned().unwrap_or_else(T::zero),
            );
        }
        Series::new(out, order)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Series::new(self.coeffs.iter().map(|c| -c.clone()).collect(), self.order)
    }

    pub fn scale(&self, s: &T) -> Self {
        Series::new(
            self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
            self.order,
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i > order {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series::new(out, order)
    }

    pub fn derivative(&self) -> Self {
        let order = self.order.saturating_sub(1);
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * T::from_i64(i as i64))
            .collect();
        Series::new(out, order)
    }

    /// Antiderivative with zero constant term; indices shift up by one.
    pub fn antiderivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(T::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            out.push(c.clone() / T::from_i64(i as i64 + 1));
        }
        Series::new(out, self.order + 1)
    }

    /// outer(inner); inner must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs.first().map(|c| c.is_zero()).unwrap_or(true) {
            return Err(Error::Domain(
                "series composition needs a zero constant term in the inner series".into(),
            ));
        }
        let order = self.order.min(inner.order);
        // Horner over the outer coefficients
        let mut acc = Series::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&inner.truncate(order));
            if !c.is_zero() {
                let mut coeffs = acc.coeffs.clone();
                if coeffs.is_empty() {
                    coeffs.push(T::zero());
                }
                coeffs[0] = coeffs[0].clone() + c.clone();
                acc = Series::new(coeffs, order);
            }
        }
        Ok(acc)
    }

    /// Partial-sum evaluation at a point.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

/// Whether series indices count powers of x or powers of 1/x.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VariableKind {
    PowerOfX,
    PowerOfInverseX,
}

/// A truncated series with complex double coefficients, in x or in 1/x.
#[derive(Clone, PartialEq, Debug)]
pub struct ComplexSeries {
    series: Series<Complex64>,
    kind: VariableKind,
}

impl ComplexSeries {
    /// Index 0 is only meaningful for powers of x; a constant term in an
    /// inverse-power series is rejected.
    pub fn new(series: Series<Complex64>, kind: VariableKind) -> Result<Self> {
        if kind == VariableKind::PowerOfInverseX && !series.coeff(0).is_zero() {
            return Err(Error::Domain(
                "inverse-power series must not have a constant term".into(),
            ));
        }
        Ok(ComplexSeries { series, kind })
    }

    pub fn kind(&self) -> VariableKind {
        self.kind
    }

    pub fn series(&self) -> &Series<Complex64> {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.series.coeff(k)
    }

    /// Σ c_j x^j or Σ c_j x^{-j} depending on the kind.
    pub fn eval_at(&self, x: f64) -> Complex64 {
        match self.kind {
            VariableKind::PowerOfX => self.series.eval(&Complex64::new(x, 0.0)),
            VariableKind::PowerOfInverseX => self.series.eval(&Complex64::new(1.0 / x, 0.0)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    #[test]
    fn derivative_and_antiderivative() {
        // derivative of x^3 -> 3x^2
        let s = Series::new(vec![r(0, 1), r(0, 1), r(0, 1), r(1, 1)], 5);
        let d = s.derivative();
        assert_eq!(d.coeff(2), r(3, 1));
        assert_eq!(d.order(), 4);
        // antiderivative of x^2 -> x^3/3
        let s = Series::new(vec![r(0, 1), r(0, 1), r(1, 1)], 4);
        let a = s.antiderivative();
        assert_eq!(a.coeff(3), r(1, 3));
        assert_eq!(a.coeff(0), r(0, 1));
        assert_eq!(a.order(), 5);
    }

    #[test]
    fn mul_truncates() {
        // (1+x)(1-x) = 1 - x^2
        let a = Series::new(vec![r(1, 1), r(1, 1)], 3);
        let b = Series::new(vec![r(1, 1), r(-1, 1)], 3);
        let p = a.mul(&b);
        assert_eq!(p.coeff(0), r(1, 1));
        assert_eq!(p.coeff(1), r(0, 1));
        assert_eq!(p.coeff(2), r(-1, 1));
    }

    #[test]
    fn compose_examples() {
        // outer y + y^2, inner y (identity)
        let outer = Series::new(vec![r(0, 1), r(1, 1), r(1, 1)], 3);
        let inner = Series::new(vec![r(0, 1), r(1, 1)], 3);
        assert_eq!(outer.compose(&inner).unwrap(), outer.truncate(3));
        // outer y^2, inner y + y^2, T = 3 -> y^2 + 2y^3
        let outer = Series::new(vec![r(0, 1), r(0, 1), r(1, 1)], 3);
        let inner = Series::new(vec![r(0, 1), r(1, 1), r(1, 1)], 3);
        let c = outer.compose(&inner).unwrap();
        assert_eq!(c.coeff(2), r(1, 1));
        assert_eq!(c.coeff(3), r(2, 1));
        assert_eq!(c.coeff(1), r(0, 1));
        // nonzero constant term rejected
        let bad = Series::new(vec![r(1, 1)], 3);
        assert!(outer.compose(&bad).is_err());
    }

    #[test]
    fn inverse_kind_rejects_constant() {
        let s = Series::new(vec![Complex64::new(1.0, 0.0)], 3);
        assert!(ComplexSeries::new(s, VariableKind::PowerOfInverseX).is_err());
        let s = Series::new(vec![Complex64::new(0.0, 0.0), Complex64::new(2.0, 0.0)], 3);
        let cs = ComplexSeries::new(s, VariableKind::PowerOfInverseX).unwrap();
        assert!((cs.eval_at(4.0).re - 0.5).abs() < 1e-15);
    }
}
