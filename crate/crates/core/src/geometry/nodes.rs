//! Node counts on divisors via weighted Bezout and determinantal lengths.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::GeometryError;
use crate::series::{IntPolynomial, RationalSeries, WeightVector};

/// The weighted projective plane `P(w1, w2, w3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedPlane(pub [u32; 3]);

impl WeightedPlane {
    pub fn new(w1: u32, w2: u32, w3: u32) -> Result<Self, GeometryError> {
        if w1 == 0 || w2 == 0 || w3 == 0 {
            return Err(GeometryError::ZeroWeight);
        }
        let mut w = [w1, w2, w3];
        w.sort_unstable();
        Ok(Self(w))
    }

    pub fn projective() -> Self {
        Self([1, 1, 1])
    }

    pub fn weights(&self) -> WeightVector {
        WeightVector::new(self.0.to_vec()).expect("positive")
    }

    pub fn product(&self) -> u64 {
        self.0.iter().map(|&w| w as u64).product()
    }
}

impl fmt::Display for WeightedPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for WeightedPlane {
    type Err = GeometryError;

    /// `"1,1,3"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let w: Vec<u32> = s
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| GeometryError::Syntax(s.to_string())))
            .collect::<Result<_, _>>()?;
        match w.as_slice() {
            [a, b, c] => WeightedPlane::new(*a, *b, *c),
            _ => Err(GeometryError::Syntax(s.to_string())),
        }
    }
}

/// Intersection number `d e / (w1 w2 w3)` of two general curves.
pub fn weighted_bezout(d: u32, e: u32, plane: WeightedPlane) -> BigRational {
    BigRational::new(BigInt::from(d as u64 * e as u64), BigInt::from(plane.product()))
}

/// Degrees of a 2x3 matrix of forms on a plane, entry `(i, j)` of degree `r_i + c_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeterminantalData {
    pub row_degrees: [i64; 2],
    pub col_degrees: [i64; 3],
    pub plane: WeightedPlane,
}

impl DeterminantalData {
    /// Hilbert-Burch numerator of the rank-drop locus.
    pub fn numerator(&self) -> Result<IntPolynomial, GeometryError> {
        let [r1, r2] = self.row_degrees;
        let [c1, c2, c3] = self.col_degrees;
        if [r1 + c1, r1 + c2, r1 + c3, r2 + c1, r2 + c2, r2 + c3].iter().any(|&x| x < 0) {
            return Err(GeometryError::NegativeEntryDegree);
        }
        let r = r1 + r2;
        let sc = c1 + c2 + c3;
        let exps = [r + c1 + c2, r + c1 + c3, r + c2 + c3, r + sc + r1, r + sc + r2];
        if exps.iter().any(|&x| x < 0) {
            return Err(GeometryError::NegativeEntryDegree);
        }
        let e = |x: i64| x as u32;
        let mut n = IntPolynomial::one();
        for &x in &exps[..3] {
            n.add_term(e(x), BigInt::from(-1));
        }
        for &x in &exps[3..] {
            n.add_term(e(x), BigInt::one());
        }
        Ok(n)
    }
}

/// Length of the zero-dimensional scheme where the matrix drops rank.
pub fn determinantal_length(dd: &DeterminantalData) -> Result<BigInt, GeometryError> {
    let series = RationalSeries::new(dd.numerator()?, dd.plane.weights());
    match series.leading_coefficient_at_one() {
        Ok((1, len)) if len.is_integer() && len.is_positive() => Ok(len.to_integer()),
        Ok((1, len)) => Err(GeometryError::NonIntegral(len.to_string())),
        Ok((order, _)) => Err(GeometryError::NotZeroDimensional { pole_order: Some(order) }),
        Err(_) => Err(GeometryError::NotZeroDimensional { pole_order: None }),
    }
}

/// Complete-intersection pieces `(d, e)` on one divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorPieces {
    pub name: String,
    pub plane: WeightedPlane,
    pub pairs: Vec<(u32, u32)>,
}

impl DivisorPieces {
    /// Sum of the weighted Bezout numbers, which must be integral.
    pub fn count(&self) -> Result<i64, GeometryError> {
        let mut total = BigRational::from_integer(0.into());
        for &(d, e) in &self.pairs {
            total += weighted_bezout(d, e, self.plane);
        }
        if !total.is_integer() {
            return Err(GeometryError::NonIntegral(total.to_string()));
        }
        i64::try_from(total.to_integer()).map_err(|_| GeometryError::NonIntegral(total.to_string()))
    }
}

/// Node counts per divisor with the points shared between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeReport {
    pub counts: BTreeMap<String, i64>,
    pub shared: i64,
    pub total: i64,
}

impl NodeReport {
    pub fn new(counts: BTreeMap<String, i64>, shared: i64) -> Self {
        let total = counts.values().sum::<i64>() - shared;
        Self { counts, shared, total }
    }

    /// Nodes on `keep` that survive unprojecting the other divisor: its shared points are absorbed.
    pub fn surviving_on(&self, keep: &str) -> Option<i64> {
        self.counts.get(keep).map(|c| c - self.shared)
    }
}

/// Standard choice `A = E = 0`: the singular locus splits into complete intersections.
pub fn standard_choice_nodes(divisors: &[DivisorPieces], shared: i64) -> Result<NodeReport, GeometryError> {
    if divisors.is_empty() || divisors.iter().any(|d| d.pairs.is_empty()) {
        return Err(GeometryError::NoPieces);
    }
    let mut counts = BTreeMap::new();
    for d in divisors {
        counts.insert(d.name.clone(), d.count()?);
    }
    Ok(NodeReport::new(counts, shared))
}
