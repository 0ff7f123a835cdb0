//! Degree calculus for antisymmetric 5x5 matrices of forms.
//!
//! Entry degrees `b_ab = q_a + q_b` determine the Pfaffian degrees
//! `d_i = sum(q) - q_i` and the adjunction number `k = 2 sum(q)`.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use super::matrix::{upper_index, upper_pairs};
use super::PfaffianError;
use crate::series::IntPolynomial;

/// Strict upper triangle of entry degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkewDegreeMatrix5 {
    upper: [i64; 10],
}

impl SkewDegreeMatrix5 {
    pub fn new(upper: [i64; 10]) -> Self {
        Self { upper }
    }

    /// Degree of `m_ab`, symmetric in `a, b`.
    pub fn get(&self, a: usize, b: usize) -> i64 {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.upper[upper_index(a, b)]
    }

    pub fn upper(&self) -> &[i64; 10] {
        &self.upper
    }
}

impl FromStr for SkewDegreeMatrix5 {
    type Err = PfaffianError;

    /// `"1,1,2,2;1,2,2;2,2;3"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PfaffianError::DegreeSyntax(s.to_string());
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 4 {
            return Err(err());
        }
        let mut out = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            let cells: Vec<i64> =
                row.split(',').map(|c| c.trim().parse().map_err(|_| err())).collect::<Result<_, _>>()?;
            if cells.len() != 4 - i {
                return Err(err());
            }
            out.extend(cells);
        }
        Ok(Self { upper: out.try_into().map_err(|_| err())? })
    }
}

impl fmt::Display for SkewDegreeMatrix5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = &self.upper;
        write!(f, "{},{},{},{};{},{},{};{},{};{}", u[0], u[1], u[2], u[3], u[4], u[5], u[6], u[7], u[8], u[9])
    }
}

/// Solution of `b_ab = q_a + q_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryWeights {
    pub q: [Rational64; 5],
    pub pfaffian_degrees: [i64; 5],
    pub k: i64,
}

/// Solves from `b12, b13, b23` and verifies the remaining entries.
pub fn solve_entry_weights(d: &SkewDegreeMatrix5) -> Result<EntryWeights, PfaffianError> {
    let b = |a, c| Rational64::from_integer(d.get(a, c));
    let q1 = (b(1, 2) + b(1, 3) - b(2, 3)) / Rational64::from_integer(2);
    let q: [Rational64; 5] = std::array::from_fn(|i| if i == 0 { q1 } else { b(1, i + 1) - q1 });
    let violated: Vec<(usize, usize)> = upper_pairs().filter(|&(a, c)| q[a - 1] + q[c - 1] != b(a, c)).collect();
    if !violated.is_empty() {
        return Err(PfaffianError::InconsistentDegrees(violated));
    }
    let total: Rational64 = q.iter().copied().fold(Rational64::zero(), |x, y| x + y);
    // b_ab integral forces all q_i to share a fractional part of 0 or 1/2, so these are integers.
    let to_int = |r: Rational64| r.to_integer();
    let pfaffian_degrees = std::array::from_fn(|i| to_int(total - q[i]));
    let k = to_int(total * 2);
    Ok(EntryWeights { q, pfaffian_degrees, k })
}

/// `1 - sum t^(d_i) + sum t^(k - d_i) - t^k`, like terms combined.
pub fn pfaffian_numerator(d: &[i64; 5], k: i64) -> Result<IntPolynomial, PfaffianError> {
    if d.iter().any(|&x| x < 0 || x >= k) {
        return Err(PfaffianError::DegreeAboveAdjunction { degrees: *d, k });
    }
    let e = |x: i64| x.to_u32().expect("bounded by k");
    let mut n = IntPolynomial::from_terms([(0, 1), (e(k), -1)]);
    for &x in d {
        n.add_term(e(x), (-1).into());
        n.add_term(e(k - x), 1.into());
    }
    Ok(n)
}

/// Number of `(equation, syzygy)` degree pairs that cancel in [`pfaffian_numerator`].
pub fn numerator_overlaps(d: &[i64; 5], k: i64) -> usize {
    let mut syz: Vec<i64> = d.iter().map(|x| k - x).collect();
    let mut count = 0;
    for x in d {
        if let Some(i) = syz.iter().position(|y| y == x) {
            syz.remove(i);
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, m: i64) -> Rational64 {
        Rational64::new(n, m)
    }

    #[test]
    fn half_integral_solution() {
        let d: SkewDegreeMatrix5 = "1,1,2,2;1,2,2;2,2;3".parse().unwrap();
        let s = solve_entry_weights(&d).unwrap();
        assert_eq!(s.q, [r(1, 2), r(1, 2), r(1, 2), r(3, 2), r(3, 2)]);
        assert_eq!(s.pfaffian_degrees, [4, 4, 4, 3, 3]);
        assert_eq!(s.k, 9);
    }

    #[test]
    fn inconsistent_matrix_lists_entries() {
        let d: SkewDegreeMatrix5 = "1,1,2,2;1,2,2;2,2;4".parse().unwrap();
        assert_eq!(solve_entry_weights(&d), Err(PfaffianError::InconsistentDegrees(vec![(4, 5)])));
    }

    #[test]
    fn degenerate_overlap() {
        let n = pfaffian_numerator(&[1; 5], 2).unwrap();
        assert_eq!(n, IntPolynomial::from_terms([(0, 1), (2, -1)]));
        assert_eq!(numerator_overlaps(&[1; 5], 2), 5);
    }

    #[test]
    fn syntax_errors() {
        assert!("1,1,2;1,2,2;2,2;3".parse::<SkewDegreeMatrix5>().is_err());
        assert!("1,1,2,2;1,2,2;2,2".parse::<SkewDegreeMatrix5>().is_err());
        assert_eq!("1,3,3,3;3,3,3;5,5;5".parse::<SkewDegreeMatrix5>().unwrap().to_string(), "1,3,3,3;3,3,3;5,5;5");
    }
}
