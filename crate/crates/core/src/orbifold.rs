//! Orbifold Riemann-Roch for Calabi-Yau threefolds with isolated cyclic quotient
//! singularities.
//!
//! The Hilbert series of `(X, A)` is the smooth initial term determined by
//! `h^0(A)` and `h^0(2A)` plus one contribution per basket point. Contributions
//! are looked up in a [`ContributionRegistry`]; the default registry knows
//! `1/3(1,1,1)` and `1/5(1,1,3)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use thiserror::Error;

use crate::series::{IntPolynomial, RationalSeries, WeightVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbifoldError {
    #[error("1/{r}({a},{b},{c}) is not an isolated Gorenstein quotient singularity")]
    InvalidSingularity { r: u32, a: u32, b: u32, c: u32 },
    #[error("no orbifold contribution registered for {0}")]
    UnsupportedSingularity(QuotientSingularity),
    #[error("cannot parse basket entry `{0}`")]
    Parse(String),
}

/// The cyclic quotient singularity `1/r(a,b,c)`, weights sorted ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuotientSingularity {
    pub r: u32,
    pub weights: [u32; 3],
}

impl QuotientSingularity {
    /// Requires `r >= 2`, each weight coprime to `r`, and `a + b + c = 0 mod r`.
    pub fn new(r: u32, a: u32, b: u32, c: u32) -> Result<Self, OrbifoldError> {
        let bad = OrbifoldError::InvalidSingularity { r, a, b, c };
        if r < 2 {
            return Err(bad);
        }
        let mut w = [a % r, b % r, c % r];
        if w.iter().any(|x| x.gcd(&r) != 1) || !(a + b + c).is_multiple_of(r) {
            return Err(bad);
        }
        w.sort_unstable();
        Ok(Self { r, weights: w })
    }
}

impl fmt::Display for QuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.weights;
        write!(f, "1/{}({a},{b},{c})", self.r)
    }
}

impl FromStr for QuotientSingularity {
    type Err = OrbifoldError;

    /// Parses `1/r(a,b,c)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || OrbifoldError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = compact.strip_prefix("1/").ok_or_else(err)?;
        let (r, tail) = rest.split_once('(').ok_or_else(err)?;
        let inner = tail.strip_suffix(')').ok_or_else(err)?;
        let nums: Vec<u32> = inner.split(',').map(|x| x.parse().map_err(|_| err())).collect::<Result<_, _>>()?;
        let r: u32 = r.parse().map_err(|_| err())?;
        match nums.as_slice() {
            [a, b, c] => QuotientSingularity::new(r, *a, *b, *c),
            _ => Err(err()),
        }
    }
}

/// Multiset of quotient singularities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Basket {
    points: BTreeMap<QuotientSingularity, u32>,
}

impl Basket {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, q: QuotientSingularity, count: u32) -> Self {
        self.insert(q, count);
        self
    }

    pub fn insert(&mut self, q: QuotientSingularity, count: u32) {
        if count > 0 {
            *self.points.entry(q).or_insert(0) += count;
        }
    }

    /// Removes one copy of `q`; returns false if absent.
    pub fn remove_one(&mut self, q: &QuotientSingularity) -> bool {
        match self.points.get_mut(q) {
            Some(k) if *k > 1 => {
                *k -= 1;
                true
            }
            Some(_) => {
                self.points.remove(q);
                true
            }
            None => false,
        }
    }

    pub fn multiplicity(&self, q: &QuotientSingularity) -> u32 {
        self.points.get(q).copied().unwrap_or(0)
    }

    /// Distinct types with their multiplicities, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&QuotientSingularity, u32)> + '_ {
        self.points.iter().map(|(q, k)| (q, *k))
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn indices(&self) -> Vec<u32> {
        self.points.keys().map(|q| q.r).collect()
    }
}

impl fmt::Display for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points.iter().map(|(q, k)| format!("{k}x{q}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Basket {
    type Err = OrbifoldError;

    /// Parses `4x1/3(1,1,1),1x1/5(1,1,3)`; whitespace is ignored, the empty string is the empty basket.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut basket = Basket::new();
        if compact.is_empty() {
            return Ok(basket);
        }
        // Commas also separate the local weights, so split at entry starts instead.
        let mut entries = Vec::new();
        let mut depth = 0;
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    entries.push(&compact[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        entries.push(&compact[start..]);
        for entry in entries {
            let err = || OrbifoldError::Parse(entry.to_string());
            let (count, sing) = entry.split_once('x').ok_or_else(err)?;
            let count: u32 = count.parse().map_err(|_| err())?;
            basket.insert(sing.parse()?, count);
        }
        Ok(basket)
    }
}

/// `h^0(A)` and `h^0(2A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InitialData {
    pub p1: u32,
    pub p2: u32,
}

/// Contribution of one basket point, with its projection data.
#[derive(Clone, Debug)]
pub struct Contribution {
    /// Periodic correction term added to the Hilbert series.
    pub term: RationalSeries,
    /// Weights of the exceptional plane `P(w1,w2,w3)` produced by projecting from the point.
    pub divisor: [u32; 3],
    /// Singularity left on the projected variety, if any.
    pub residual: Option<QuotientSingularity>,
}

/// Singularity type -> orbifold contribution.
#[derive(Clone, Debug)]
pub struct ContributionRegistry {
    entries: BTreeMap<QuotientSingularity, Contribution>,
}

impl Default for ContributionRegistry {
    fn default() -> Self {
        let mut reg = Self { entries: BTreeMap::new() };
        let q3 = QuotientSingularity::new(3, 1, 1, 1).expect("valid");
        let q5 = QuotientSingularity::new(5, 1, 1, 3).expect("valid");
        reg.register(
            q3,
            Contribution {
                term: RationalSeries::new(IntPolynomial::monomial(3, 1), weights(&[1, 1, 1, 3])),
                divisor: [1, 1, 1],
                residual: None,
            },
        );
        reg.register(
            q5,
            Contribution {
                term: RationalSeries::new(IntPolynomial::from_terms([(3, 1), (5, 1)]), weights(&[1, 1, 1, 5])),
                divisor: [1, 1, 3],
                residual: Some(q3),
            },
        );
        reg
    }
}

impl ContributionRegistry {
    pub fn empty() -> Self {
        Self { entries: BTreeMap::new() }
    }

    pub fn register(&mut self, q: QuotientSingularity, c: Contribution) {
        self.entries.insert(q, c);
    }

    pub fn get(&self, q: &QuotientSingularity) -> Result<&Contribution, OrbifoldError> {
        self.entries.get(q).ok_or(OrbifoldError::UnsupportedSingularity(*q))
    }

    pub fn types(&self) -> impl Iterator<Item = &QuotientSingularity> + '_ {
        self.entries.keys()
    }

    /// Hilbert series of `(X, A)`.
    pub fn assemble(&self, d: InitialData, basket: &Basket) -> Result<RationalSeries, OrbifoldError> {
        let mut s = initial_series(d);
        for (q, k) in basket.iter() {
            s = s.add(&self.get(q)?.term.scale(k));
        }
        Ok(s)
    }
}

fn weights(w: &[u32]) -> WeightVector {
    WeightVector::new(w.to_vec()).expect("positive weights")
}

/// Smooth part `(1 + (P1-4)t + (P2-4P1+6)t^2 + (P1-4)t^3 + t^4) / (1-t)^4`.
pub fn initial_series(d: InitialData) -> RationalSeries {
    let p1 = BigInt::from(d.p1);
    let p2 = BigInt::from(d.p2);
    let a: BigInt = &p1 - 4;
    let b: BigInt = &p2 - &p1 * 4 + 6;
    let num = IntPolynomial::from_terms([(0, BigInt::from(1)), (1, a.clone()), (2, b), (3, a), (4, BigInt::from(1))]);
    RationalSeries::new(num, weights(&[1, 1, 1, 1]))
}

/// Contribution of `q` in the default registry.
pub fn orbifold_term(q: &QuotientSingularity) -> Result<RationalSeries, OrbifoldError> {
    ContributionRegistry::default().get(q).map(|c| c.term.clone())
}

/// Hilbert series of `(X, A)` using the default registry.
pub fn assemble(d: InitialData, basket: &Basket) -> Result<RationalSeries, OrbifoldError> {
    ContributionRegistry::default().assemble(d, basket)
}

/// Convenience for the common `n x 1/3(1,1,1) + m x 1/5(1,1,3)` baskets.
pub fn standard_basket(n: u32, m: u32) -> Basket {
    Basket::new()
        .with(QuotientSingularity::new(3, 1, 1, 1).expect("valid"), n)
        .with(QuotientSingularity::new(5, 1, 1, 3).expect("valid"), m)
}
