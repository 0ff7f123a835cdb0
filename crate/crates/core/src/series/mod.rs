//! Rational Hilbert series `N(t) / prod (1 - t^a)` and their truncated expansions.
//!
//! Invariants:
//! - a [`RationalSeries`] denominator is a multiset of positive weights;
//! - two series are equal when their cross-multiplied numerators agree;
//! - [`TruncatedSeries`] coefficients are exact integers with no implied tail.

mod poly;
mod truncated;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

pub use poly::IntPolynomial;
pub use truncated::TruncatedSeries;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("weight must be positive")]
    ZeroWeight,
    #[error("series has no pole at t = 1")]
    NoPole,
}

/// Sorted multiset of positive weights.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(mut weights: Vec<u32>) -> Result<Self, SeriesError> {
        if weights.contains(&0) {
            return Err(SeriesError::ZeroWeight);
        }
        weights.sort_unstable();
        Ok(Self(weights))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn push(&mut self, w: u32) {
        assert!(w > 0, "weight must be positive");
        let at = self.0.partition_point(|&x| x <= w);
        self.0.insert(at, w);
    }

    /// Multiset union.
    pub fn union(&self, other: &WeightVector) -> WeightVector {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        WeightVector(v)
    }

    /// Multiset difference, `None` if `other` is not contained in `self`.
    pub fn difference(&self, other: &WeightVector) -> Option<WeightVector> {
        let mut v = self.0.clone();
        for w in &other.0 {
            let at = v.iter().position(|x| x == w)?;
            v.remove(at);
        }
        Some(WeightVector(v))
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for w in &self.0 {
            *m.entry(*w).or_insert(0) += 1;
        }
        m
    }

    /// Compact ambient notation such as `P(1^3,3^4,5)`.
    pub fn ambient_notation(&self) -> String {
        let parts: Vec<String> = self
            .multiplicities()
            .into_iter()
            .map(|(w, k)| if k == 1 { w.to_string() } else { format!("{w}^{k}") })
            .collect();
        format!("P({})", parts.join(","))
    }

    fn from_multiplicities(m: &BTreeMap<u32, u32>) -> Self {
        let mut v = Vec::new();
        for (w, k) in m {
            v.extend(std::iter::repeat_n(*w, *k as usize));
        }
        WeightVector(v)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `numerator / prod_{a in denominator} (1 - t^a)`.
#[derive(Clone, Debug)]
pub struct RationalSeries {
    pub numerator: IntPolynomial,
    pub denominator: WeightVector,
}

impl RationalSeries {
    pub fn new(numerator: IntPolynomial, denominator: WeightVector) -> Self {
        Self { numerator, denominator }
    }

    pub fn zero() -> Self {
        Self::new(IntPolynomial::zero(), WeightVector::empty())
    }

    /// `1 / prod (1 - t^a)`.
    pub fn free(weights: WeightVector) -> Self {
        Self::new(IntPolynomial::one(), weights)
    }

    /// Sum over a common denominator built from the per-weight maximum multiplicity.
    pub fn add(&self, other: &RationalSeries) -> RationalSeries {
        let ma = self.denominator.multiplicities();
        let mb = other.denominator.multiplicities();
        let mut merged = ma.clone();
        for (w, k) in &mb {
            let slot = merged.entry(*w).or_insert(0);
            *slot = (*slot).max(*k);
        }
        let lift = |num: &IntPolynomial, own: &BTreeMap<u32, u32>| {
            let mut out = num.clone();
            for (w, k) in &merged {
                let have = own.get(w).copied().unwrap_or(0);
                out = out.mul_factor(*w, k - have);
            }
            out
        };
        let numerator = &lift(&self.numerator, &ma) + &lift(&other.numerator, &mb);
        RationalSeries::new(numerator, WeightVector::from_multiplicities(&merged))
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> RationalSeries {
        RationalSeries::new(self.numerator.scale(&c.into()), self.denominator.clone())
    }

    /// Equality of the underlying rational functions.
    pub fn equals(&self, other: &RationalSeries) -> bool {
        // Only the factors not shared by both denominators need multiplying in.
        let only_other = other.denominator.minus(&self.denominator);
        let only_self = self.denominator.minus(&other.denominator);
        let mut lhs = self.numerator.clone();
        for w in only_other {
            lhs = lhs.mul_factor(w, 1);
        }
        let mut rhs = other.numerator.clone();
        for w in only_self {
            rhs = rhs.mul_factor(w, 1);
        }
        lhs == rhs
    }

    /// Power-series coefficients of degrees `0..=order`.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (e, c) in self.numerator.terms() {
            if (e as usize) <= order {
                coeffs[e as usize] = c.clone();
            }
        }
        // Dividing by (1 - t^a) is a running sum with stride a.
        for &a in self.denominator.as_slice() {
            let a = a as usize;
            for i in a..=order {
                let prev = coeffs[i - a].clone();
                coeffs[i] += prev;
            }
        }
        TruncatedSeries::from_coefficients(coeffs)
    }

    /// Pole order `p` at `t = 1` and the limit of `(1 - t)^p * self` there.
    pub fn leading_coefficient_at_one(&self) -> Result<(u32, BigRational), SeriesError> {
        let (v, q1) = self.numerator.order_at_one().ok_or(SeriesError::NoPole)?;
        let n = self.denominator.len() as u32;
        if v >= n {
            return Err(SeriesError::NoPole);
        }
        // N = (t-1)^v q = (-1)^v (1-t)^v q, and each (1 - t^a) = (1 - t)(1 + ... + t^(a-1)).
        let prod: BigInt = self.denominator.as_slice().iter().map(|&a| BigInt::from(a)).product();
        let mut value = BigRational::new(q1, prod);
        if v % 2 == 1 {
            value = -value;
        }
        Ok((n - v, value))
    }

    /// Cancels denominator factors that divide the numerator.
    pub fn reduced(&self) -> RationalSeries {
        let mut num = self.numerator.clone();
        let mut kept = Vec::new();
        for &a in self.denominator.as_slice().iter().rev() {
            match num.div_factor(a) {
                Some(q) => num = q,
                None => kept.push(a),
            }
        }
        RationalSeries::new(num, WeightVector::new(kept).expect("weights stay positive"))
    }
}

impl PartialEq for RationalSeries {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for RationalSeries {}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den: Vec<String> = self
            .denominator
            .multiplicities()
            .into_iter()
            .map(|(w, k)| {
                let base = if w == 1 { "(1 - t)".to_string() } else { format!("(1 - t^{w})") };
                if k == 1 {
                    base
                } else {
                    format!("{base}^{k}")
                }
            })
            .collect();
        if den.is_empty() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, den.join(""))
        }
    }
}

impl WeightVector {
    /// Elements of `self` left after cancelling one copy of each element of `other`.
    pub fn minus(&self, other: &WeightVector) -> Vec<u32> {
        let mut rest = other.0.clone();
        let mut out = Vec::new();
        for w in &self.0 {
            match rest.iter().position(|x| x == w) {
                Some(i) => {
                    rest.remove(i);
                }
                None => out.push(*w),
            }
        }
        out
    }
}

/// Leading coefficient at `t = 1`; for a threefold series this is `A^3`.
pub fn degree_of(series: &RationalSeries) -> Result<BigRational, SeriesError> {
    series.leading_coefficient_at_one().map(|(_, v)| v)
}
