//! Truncated power series.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPolynomial;

/// Coefficients `c_0, ..., c_order` of a power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series keeps at least c_0");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, d: usize) -> &BigInt {
        &self.coeffs[d]
    }

    /// `self * (1 - t^a)^m`, truncated at the same order.
    pub fn mul_factor(&self, a: u32, m: u32) -> TruncatedSeries {
        let a = a as usize;
        let mut c = self.coeffs.clone();
        for _ in 0..m {
            for i in (a..c.len()).rev() {
                let prev = c[i - a].clone();
                c[i] -= prev;
            }
        }
        TruncatedSeries { coeffs: c }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.coeffs.len().min(other.coeffs.len());
        TruncatedSeries { coeffs: (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    /// Smallest `d >= from` with `c_d != 0`.
    pub fn first_nonzero_from(&self, from: usize) -> Option<usize> {
        (from..self.coeffs.len()).find(|&d| !self.coeffs[d].is_zero())
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_coefficients(&self.coeffs)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coefficients(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn mul_factor_clears_leading_coefficient() {
        let s = ts(&[1, 6, 21, 56]);
        assert_eq!(s.mul_factor(1, 6), ts(&[1, 0, 0, 0]));
    }

    #[test]
    fn first_nonzero() {
        assert_eq!(ts(&[1, 0, 0, 4]).first_nonzero_from(1), Some(3));
        assert_eq!(ts(&[1, 0]).first_nonzero_from(1), None);
    }
}
