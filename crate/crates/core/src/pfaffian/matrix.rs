//! Antisymmetric 5x5 matrices and their maximal Pfaffians.

use std::sync::Arc;

use super::degrees::SkewDegreeMatrix5;
use super::{PfaffianError, Ring, SparsePoly, TriangularIdeal};

/// Position of `(a, b)`, `1 <= a < b <= 5`, in the row-major upper triangle.
pub(crate) fn upper_index(a: usize, b: usize) -> usize {
    debug_assert!(1 <= a && a < b && b <= 5);
    // Rows hold 4, 3, 2, 1 entries.
    let before: usize = (1..a).map(|r| 5 - r).sum();
    before + (b - a - 1)
}

/// All index pairs `(a, b)` with `a < b`, in upper-triangle order.
pub fn upper_pairs() -> impl Iterator<Item = (usize, usize)> {
    (1..=5).flat_map(|a| (a + 1..=5).map(move |b| (a, b)))
}

/// Antisymmetric 5x5 matrix stored by its strict upper triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix5 {
    upper: Vec<SparsePoly>,
}

impl SkewMatrix5 {
    /// Entries `m12, m13, m14, m15, m23, m24, m25, m34, m35, m45`.
    pub fn from_upper(entries: Vec<SparsePoly>) -> Result<Self, PfaffianError> {
        if entries.len() != 10 {
            return Err(PfaffianError::MatrixShape(entries.len()));
        }
        Ok(Self { upper: entries })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self { upper: vec![SparsePoly::zero(ring); 10] }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.upper[0].ring()
    }

    /// `m_ab` with `m_ba = -m_ab` and zero diagonal; indices are 1-based.
    pub fn get(&self, a: usize, b: usize) -> SparsePoly {
        assert!((1..=5).contains(&a) && (1..=5).contains(&b), "index out of range");
        match a.cmp(&b) {
            std::cmp::Ordering::Less => self.upper[upper_index(a, b)].clone(),
            std::cmp::Ordering::Greater => -&self.upper[upper_index(b, a)],
            std::cmp::Ordering::Equal => SparsePoly::zero(self.ring()),
        }
    }

    pub fn upper(&self) -> &[SparsePoly] {
        &self.upper
    }

    /// Nonzero entries that are not homogeneous of the prescribed degree.
    pub fn degree_mismatches(&self, degrees: &SkewDegreeMatrix5) -> Vec<(usize, usize)> {
        upper_pairs()
            .filter(|&(a, b)| {
                let m = &self.upper[upper_index(a, b)];
                !m.is_zero() && m.degree().map(i64::from) != Some(degrees.get(a, b))
            })
            .collect()
    }
}

/// `Pf_i = m_jk m_lm - m_jl m_km + m_jm m_kl` for `j<k<l<m` the indices other than `i`.
pub fn maximal_pfaffians(m: &SkewMatrix5) -> [SparsePoly; 5] {
    std::array::from_fn(|i| {
        let i = i + 1;
        let idx: Vec<usize> = (1..=5).filter(|&x| x != i).collect();
        let [j, k, l, n] = [idx[0], idx[1], idx[2], idx[3]];
        let a = &m.get(j, k) * &m.get(l, n);
        let b = &m.get(j, l) * &m.get(k, n);
        let c = &m.get(j, n) * &m.get(k, l);
        &(&a - &b) + &c
    })
}

/// Tom and Jerry sparsity patterns relative to an ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// Every entry outside row and column `i` lies in the ideal.
    Tom(usize),
    /// Every entry in rows and columns `i` and `j` lies in the ideal.
    Jerry(usize, usize),
}

impl Format {
    /// Entries the format requires to lie in the ideal.
    pub fn required_entries(self) -> Vec<(usize, usize)> {
        match self {
            Format::Tom(i) => upper_pairs().filter(|&(a, b)| a != i && b != i).collect(),
            Format::Jerry(i, j) => upper_pairs().filter(|&(a, b)| [a, b].iter().any(|x| *x == i || *x == j)).collect(),
        }
    }

    fn check(self) {
        let ok = match self {
            Format::Tom(i) => (1..=5).contains(&i),
            Format::Jerry(i, j) => (1..=5).contains(&i) && (1..=5).contains(&j) && i != j,
        };
        assert!(ok, "invalid format indices {self:?}");
    }
}

impl std::fmt::Display for Format {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Format::Tom(i) => write!(f, "Tom_{i}"),
            Format::Jerry(i, j) => write!(f, "Jer_{i}{j}"),
        }
    }
}

pub fn satisfies(m: &SkewMatrix5, ideal: &TriangularIdeal, format: Format) -> bool {
    format.check();
    format.required_entries().into_iter().all(|(a, b)| ideal.is_member(&m.get(a, b)))
}

pub fn is_tom(m: &SkewMatrix5, ideal: &TriangularIdeal, i: usize) -> bool {
    satisfies(m, ideal, Format::Tom(i))
}

pub fn is_jerry(m: &SkewMatrix5, ideal: &TriangularIdeal, i: usize, j: usize) -> bool {
    satisfies(m, ideal, Format::Jerry(i, j))
}

/// Entries a format forces into an ideal whose degree is below every generator degree,
/// so they could only be zero.
pub fn degree_obstructions(
    degrees: &SkewDegreeMatrix5,
    min_generator_degree: i64,
    format: Format,
) -> Vec<(usize, usize)> {
    format.check();
    format.required_entries().into_iter().filter(|&(a, b)| degrees.get(a, b) < min_generator_degree).collect()
}
