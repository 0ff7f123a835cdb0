//! Sparse univariate polynomials with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial in `t`, stored as exponent -> nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    terms: BTreeMap<u32, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * t^e`.
    pub fn monomial(e: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense coefficient list, index = exponent.
    pub fn from_coefficients<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(e, c)| (e as u32, c.clone())))
    }

    pub fn add_term(&mut self, e: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coefficient(&self, e: u32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Multiplies by `t^e`.
    pub fn shift(&self, e: u32) -> Self {
        Self { terms: self.terms.iter().map(|(k, v)| (k + e, v.clone())).collect() }
    }

    /// `self * (1 - t^a)^m`.
    pub fn mul_factor(&self, a: u32, m: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..m {
            out = &out - &out.shift(a);
        }
        out
    }

    /// Exact division by `(1 - t^a)`, if it divides.
    pub fn div_factor(&self, a: u32) -> Option<Self> {
        // q = p / (1 - t^a) computed from the bottom: q_e = p_e + q_{e-a}.
        let deg = self.degree()?;
        if deg < a {
            return None;
        }
        let mut q: BTreeMap<u32, BigInt> = BTreeMap::new();
        for e in 0..=deg - a {
            let mut c = self.coefficient(e);
            if e >= a {
                if let Some(prev) = q.get(&(e - a)) {
                    c += prev;
                }
            }
            if !c.is_zero() {
                q.insert(e, c);
            }
        }
        let q = Self { terms: q };
        (&q.mul_factor(a, 1) == self).then_some(q)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Writes `self = (t - 1)^v * q` with `q(1) != 0`; returns `(v, q(1))`.
    /// Returns `None` for the zero polynomial.
    pub fn order_at_one(&self) -> Option<(u32, BigInt)> {
        if self.is_zero() {
            return None;
        }
        let mut dense: Vec<BigInt> = self.dense();
        let mut v = 0;
        loop {
            let value: BigInt = dense.iter().sum();
            if !value.is_zero() {
                return Some((v, value));
            }
            // Synthetic division by (t - 1), highest coefficient first.
            let n = dense.len();
            let mut quotient = vec![BigInt::zero(); n - 1];
            let mut carry = BigInt::zero();
            for i in (1..n).rev() {
                carry += &dense[i];
                quotient[i - 1] = carry.clone();
            }
            dense = quotient;
            v += 1;
        }
    }

    /// Dense coefficient vector up to the degree.
    pub fn dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coefficient(e)).collect(),
        }
    }

    /// Tests `t^k p(1/t) == sign * p(t)`.
    pub fn is_palindromic(&self, k: u32, sign: i32) -> bool {
        if self.degree().is_some_and(|d| d > k) {
            return false;
        }
        self.terms.iter().all(|(e, c)| {
            let mirror = self.coefficient(k - e);
            if sign >= 0 {
                mirror == *c
            } else {
                mirror == -c
            }
        })
    }

    /// Number of sign alternations among the nonzero coefficients.
    pub fn sign_changes(&self) -> usize {
        self.terms.values().map(|c| c.is_positive()).collect::<Vec<_>>().windows(2).filter(|w| w[0] != w[1]).count()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_mag = *e == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        self.scale(&BigInt::from(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_signs() {
        let p = IntPolynomial::from_terms([(0, 1), (3, -2), (6, 1)]);
        assert_eq!(p.to_string(), "1 - 2t^3 + t^6");
        assert_eq!(IntPolynomial::monomial(1, -3).to_string(), "-3t");
    }

    #[test]
    fn factor_division_round_trips() {
        let p = IntPolynomial::from_terms([(0, 1), (1, 2), (4, -7)]);
        let q = p.mul_factor(3, 2);
        assert_eq!(q.div_factor(3).unwrap().div_factor(3).unwrap(), p);
        assert!(p.div_factor(2).is_none());
    }

    #[test]
    fn order_at_one() {
        // 1 - 3t^4 + 2t^6 vanishes to order 2; its second Taylor coefficient is 12.
        let p = IntPolynomial::from_terms([(0, 1), (4, -3), (6, 2)]);
        assert_eq!(p.order_at_one(), Some((2, BigInt::from(12))));
    }

    #[test]
    fn sign_changes_counts_alternations() {
        let p = IntPolynomial::from_terms([(0, 1), (2, -1), (3, -1), (5, 2)]);
        assert_eq!(p.sign_changes(), 2);
    }
}
