//! Truncated q-expansions with an explicit weight tag.
//!
//! A `QSeries` stores rational coefficients of q^0 .. q^trunc. Arithmetic
//! never fabricates coefficients beyond the truncation, and adding two
//! nonzero series of different weights panics: mixed-weight sums are always
//! a normalization bug upstream, never a legitimate value.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    pub weight: i64,
    coeffs: Vec<BigRational>, // index m = coefficient of q^m, length trunc + 1
}

impl QSeries {
    pub fn zero(weight: i64, trunc: usize) -> Self {
        QSeries { weight, coeffs: vec![BigRational::zero(); trunc + 1] }
    }

    pub fn from_coeffs(weight: i64, coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty());
        QSeries { weight, coeffs }
    }

    pub fn constant(value: BigRational, weight: i64, trunc: usize) -> Self {
        let mut s = Self::zero(weight, trunc);
        s.coeffs[0] = value;
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &BigRational {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, m: usize, v: BigRational) {
        self.coeffs[m] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// All coefficients integral?
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.truncation(), other.truncation(), "truncation mismatch in q-series add");
        if !self.is_zero() && !other.is_zero() {
            assert_eq!(
                self.weight, other.weight,
                "mixed-weight addition: {} vs {}",
                self.weight, other.weight
            );
        }
        let weight = if self.is_zero() { other.weight } else { self.weight };
        QSeries {
            weight,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        QSeries { weight: self.weight, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.truncation(), other.truncation(), "truncation mismatch in q-series mul");
        let trunc = self.truncation();
        let mut coeffs = vec![BigRational::zero(); trunc + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > trunc {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QSeries { weight: self.weight + other.weight, coeffs }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        QSeries { weight: self.weight, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn scale_int(&self, r: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(r.clone()))
    }

    pub fn pow(&self, e: u32, one_weight: i64) -> Self {
        let mut acc = QSeries::constant(BigRational::from_integer(BigInt::from(1)), one_weight, self.truncation());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}
