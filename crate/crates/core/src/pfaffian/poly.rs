//! Sparse multivariate polynomials over graded variables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::PfaffianError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedVariable {
    pub name: String,
    pub weight: u32,
}

/// Ordered list of graded variables shared by a family of polynomials.
#[derive(Debug, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<GradedVariable>,
    index: HashMap<String, usize>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, u32)>) -> Result<Arc<Ring>, PfaffianError> {
        let mut out = Vec::new();
        let mut index = HashMap::new();
        for (name, weight) in vars {
            let name = name.into();
            if weight == 0 {
                return Err(PfaffianError::ZeroWeight(name));
            }
            if index.insert(name.clone(), out.len()).is_some() {
                return Err(PfaffianError::DuplicateVariable(name));
            }
            out.push(GradedVariable { name, weight });
        }
        Ok(Arc::new(Ring { vars: out, index }))
    }

    pub fn variables(&self) -> &[GradedVariable] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }
}

/// Polynomial with big-integer coefficients; monomials are exponent vectors.
#[derive(Clone)]
pub struct SparsePoly {
    ring: Arc<Ring>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparsePoly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(vec![0; ring.len()], c.into());
        p
    }

    pub fn var(ring: &Arc<Ring>, name: &str) -> Result<Self, PfaffianError> {
        let i = ring.index_of(name).ok_or_else(|| PfaffianError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(ring, i))
    }

    pub fn var_at(ring: &Arc<Ring>, i: usize) -> Self {
        let mut e = vec![0; ring.len()];
        e[i] = 1;
        let mut p = Self::zero(ring);
        p.add_term(e, BigInt::one());
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        debug_assert_eq!(exps.len(), self.ring.len());
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomial_degree(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.ring.vars).map(|(e, v)| e * v.weight).sum()
    }

    /// Common weighted degree of all terms; `None` for zero or inhomogeneous polynomials.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| self.monomial_degree(e));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(&self.ring);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(&self.ring, 1);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Replaces variable `i` by `value` everywhere.
    pub fn substitute(&self, i: usize, value: &SparsePoly) -> Self {
        self.check_ring(value);
        let mut powers: Vec<SparsePoly> = vec![Self::constant(&self.ring, 1)];
        let mut out = Self::zero(&self.ring);
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            while powers.len() <= k {
                let next = powers.last().expect("nonempty") * value;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[i] = 0;
            for (pe, pc) in &powers[k].terms {
                let exps: Vec<u32> = rest.iter().zip(pe).map(|(a, b)| a + b).collect();
                out.add_term(exps, c * pc);
            }
        }
        out
    }

    /// If `self = c * x_i + rest` with `c = +-1` and `x_i` absent from `rest`, returns `(c, rest)`.
    pub fn linear_in(&self, i: usize) -> Option<(BigInt, SparsePoly)> {
        let mut coeff = None;
        let mut rest = Self::zero(&self.ring);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                rest.add_term(e.clone(), c.clone());
            } else if e[i] == 1 && e.iter().enumerate().all(|(j, x)| j == i || *x == 0) && coeff.is_none() {
                coeff = Some(c.clone());
            } else {
                return None;
            }
        }
        let c = coeff?;
        c.abs().is_one().then_some((c, rest))
    }

    fn check_ring(&self, other: &SparsePoly) {
        assert!(Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring, "polynomials from different rings");
    }
}

impl PartialEq for SparsePoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
    }
}

impl Eq for SparsePoly {}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let vars: Vec<String> = e
                .iter()
                .zip(&self.ring.vars)
                .filter(|(x, _)| **x > 0)
                .map(|(x, v)| if *x == 1 { v.name.clone() } else { format!("{}^{}", v.name, x) })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.check_ring(rhs);
        let mut out = SparsePoly::zero(&self.ring);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&BigInt::from(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<Ring> {
        Ring::new([("x", 1), ("y", 1), ("u", 3)]).unwrap()
    }

    #[test]
    fn arithmetic_and_degree() {
        let r = ring();
        let x = SparsePoly::var(&r, "x").unwrap();
        let u = SparsePoly::var(&r, "u").unwrap();
        let p = &(&x * &x.pow(2)) - &u;
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.to_string(), "x^3 - u");
        assert!(!(&x + &u).is_homogeneous());
    }

    #[test]
    fn substitution() {
        let r = ring();
        let x = SparsePoly::var(&r, "x").unwrap();
        let y = SparsePoly::var(&r, "y").unwrap();
        let p = &x.pow(2) + &y;
        let q = p.substitute(0, &(&y + &SparsePoly::constant(&r, 1)));
        assert_eq!(q.to_string(), "y^2 + 3*y + 1");
    }

    #[test]
    fn linear_detection() {
        let r = ring();
        let x = SparsePoly::var(&r, "x").unwrap();
        let y = SparsePoly::var(&r, "y").unwrap();
        let u = SparsePoly::var(&r, "u").unwrap();
        let g = &(&(&y * &x) * &y) - &u;
        let (c, rest) = g.linear_in(2).unwrap();
        assert_eq!(c, BigInt::from(-1));
        assert_eq!(rest, &(&y * &x) * &y);
        assert!(g.linear_in(0).is_none());
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(matches!(Ring::new([("x", 1), ("x", 2)]), Err(PfaffianError::DuplicateVariable(_))));
    }
}
