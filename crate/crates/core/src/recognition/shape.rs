//! Fitting Hilbert numerators to Gorenstein resolution shapes.
//!
//! Codimension 3 uses the Pfaffian shape `1 - sum t^d + sum t^(k-d) - t^k` with
//! five equations. Codimension 4 uses the 9 x 16 shape
//! `1 - sum t^d + sum t^e - sum t^(k-d) + t^k`.
//!
//! A fit is *valid* when every syzygy degree is nonnegative, the counts match,
//! and the lowest syzygy sits strictly above the lowest equation (true of any
//! minimal resolution). Valid fits are sorted with the *balanced* class first
//! (`sum d = (codim - 1) k`, which holds for Pfaffian and Kustin-Miller
//! unprojection formats) and lexicographically within a class.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::series::IntPolynomial;

/// Upper bound on enumerated candidate equation multisets.
pub const MAX_SHAPES: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("no resolution shape is known for codimension {0}")]
    UnsupportedCodim(usize),
    #[error("numerator does not have the Gorenstein symmetry of the shape")]
    NotGorenstein,
    #[error("no equation degrees fit the numerator")]
    NoFit,
    #[error("more than {MAX_SHAPES} equation multisets fit the numerator")]
    TooMany,
}

/// Equation and first-syzygy degrees of a resolution.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ResolutionShape {
    pub equations: Vec<u32>,
    pub syzygies: Vec<u32>,
}

impl ResolutionShape {
    pub fn is_balanced(&self, k: u32, codim: usize) -> bool {
        let s: u64 = self.equations.iter().map(|&d| d as u64).sum();
        s == (codim as u64 - 1) * k as u64
    }
}

/// All valid shapes, best first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeFit {
    pub candidates: Vec<ResolutionShape>,
    /// Whether `candidates` was restricted to the balanced class.
    pub balanced: bool,
}

impl ShapeFit {
    pub fn best(&self) -> &ResolutionShape {
        &self.candidates[0]
    }

    /// Number of shapes that remained after preference, `1` when unambiguous.
    pub fn ambiguity(&self) -> usize {
        self.candidates.len()
    }
}

fn counts(codim: usize) -> Result<(usize, usize), ShapeError> {
    match codim {
        3 => Ok((5, 5)),
        4 => Ok((9, 16)),
        c => Err(ShapeError::UnsupportedCodim(c)),
    }
}

fn coeff(n: &IntPolynomial, j: u32) -> i64 {
    // Shape numerators have small coefficients; anything huge cannot fit anyway.
    n.coefficient(j).to_i64().unwrap_or(i64::MAX / 4)
}

/// Syzygy degrees forced by a choice of equation degrees, if the choice is valid.
pub fn complete_shape(n: &IntPolynomial, k: u32, codim: usize, equations: &[u32]) -> Option<ResolutionShape> {
    let (neq, nsyz) = counts(codim).ok()?;
    if equations.len() != neq || equations.iter().any(|&d| d == 0 || d >= k) {
        return None;
    }
    let mut eq = equations.to_vec();
    eq.sort_unstable();
    let syzygies = match codim {
        3 => {
            let mut e: Vec<u32> = eq.iter().map(|d| k - d).collect();
            e.sort_unstable();
            let mut expected = IntPolynomial::from_terms([(0, BigInt::from(1)), (k, BigInt::from(-1))]);
            for &d in &eq {
                expected.add_term(d, BigInt::from(-1));
            }
            for &x in &e {
                expected.add_term(x, BigInt::from(1));
            }
            if &expected != n {
                return None;
            }
            e
        }
        _ => {
            let mut e_coeffs: BTreeMap<u32, i64> = BTreeMap::new();
            for j in 1..k {
                e_coeffs.insert(j, coeff(n, j));
            }
            for &d in &eq {
                *e_coeffs.get_mut(&d)? += 1;
                *e_coeffs.get_mut(&(k - d))? += 1;
            }
            if coeff(n, 0) != 1 || coeff(n, k) != 1 || n.degree() != Some(k) {
                return None;
            }
            let mut e = Vec::new();
            for (j, c) in e_coeffs {
                if c < 0 {
                    return None;
                }
                e.extend(std::iter::repeat_n(j, c as usize));
            }
            e
        }
    };
    if syzygies.len() != nsyz || syzygies[0] <= eq[0] {
        return None;
    }
    Some(ResolutionShape { equations: eq, syzygies })
}

/// Enumerates equation degrees compatible with `n` for a codimension 3 or 4 shape.
pub fn fit_resolution_shape(n: &IntPolynomial, k: u32, codim: usize) -> Result<ShapeFit, ShapeError> {
    let (neq, _) = counts(codim)?;
    let sign = if codim.is_multiple_of(2) { 1 } else { -1 };
    if !n.is_palindromic(k, sign) || coeff(n, 0) != 1 || k < 2 {
        return Err(ShapeError::NotGorenstein);
    }
    // Pair degree j with k - j; `lower[j]` is the least total D_j + D_(k-j).
    let half = (k - 1) / 2;
    let mid = k.is_multiple_of(2).then_some(k / 2);
    let mut raw = Vec::new();
    match codim {
        3 => {
            // Coefficient j of n - 1 + t^k is D_(k-j) - D_j.
            let mut base = vec![0u32; k as usize];
            let mut used = 0i64;
            for j in 1..=half {
                let r = coeff(n, j);
                if r < 0 {
                    base[j as usize] = (-r) as u32;
                } else {
                    base[(k - j) as usize] = r as u32;
                }
                used += r.abs();
            }
            if let Some(m) = mid {
                if coeff(n, m) != 0 {
                    return Err(ShapeError::NoFit);
                }
            }
            let free = neq as i64 - used;
            if free < 0 {
                return Err(ShapeError::NoFit);
            }
            let mut slots: Vec<(u32, u32)> = (1..=half).map(|j| (j, 2)).collect();
            if let Some(m) = mid {
                slots.push((m, 1));
            }
            distribute_codim3(&slots, 0, free as u32, &mut base, k, &mut raw)?;
        }
        _ => {
            let mut lower = Vec::new();
            for j in 1..=half {
                lower.push((j, (-coeff(n, j)).max(0) as u32));
            }
            let mid_lower = mid.map(|m| ((-coeff(n, m)).max(0) as u32).div_ceil(2));
            let mut d = vec![0u32; k as usize];
            let suffix: Vec<u32> = {
                let mut s = vec![0u32; lower.len() + 1];
                for i in (0..lower.len()).rev() {
                    s[i] = s[i + 1] + lower[i].1;
                }
                s
            };
            let ctx = Codim4 { k, lower: &lower, suffix: &suffix, mid, mid_lower };
            ctx.recurse(0, neq as u32, &mut d, &mut raw)?;
        }
    }
    let mut valid: Vec<ResolutionShape> = raw.into_iter().filter_map(|eq| complete_shape(n, k, codim, &eq)).collect();
    valid.sort();
    valid.dedup();
    if valid.is_empty() {
        return Err(ShapeError::NoFit);
    }
    let balanced: Vec<ResolutionShape> = valid.iter().filter(|s| s.is_balanced(k, codim)).cloned().collect();
    Ok(if balanced.is_empty() {
        ShapeFit { candidates: valid, balanced: false }
    } else {
        ShapeFit { candidates: balanced, balanced: true }
    })
}

fn multiset(d: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    for (j, &c) in d.iter().enumerate() {
        out.extend(std::iter::repeat_n(j as u32, c as usize));
    }
    out
}

fn distribute_codim3(
    slots: &[(u32, u32)],
    at: usize,
    free: u32,
    d: &mut Vec<u32>,
    k: u32,
    out: &mut Vec<Vec<u32>>,
) -> Result<(), ShapeError> {
    if free == 0 {
        out.push(multiset(d));
        return if out.len() > MAX_SHAPES { Err(ShapeError::TooMany) } else { Ok(()) };
    }
    if at == slots.len() {
        return Ok(());
    }
    let (j, cost) = slots[at];
    let mut t = 0;
    while t * cost <= free {
        d[j as usize] += t;
        if cost == 2 {
            d[(k - j) as usize] += t;
        }
        let r = distribute_codim3(slots, at + 1, free - t * cost, d, k, out);
        d[j as usize] -= t;
        if cost == 2 {
            d[(k - j) as usize] -= t;
        }
        r?;
        t += 1;
    }
    Ok(())
}

struct Codim4<'a> {
    k: u32,
    lower: &'a [(u32, u32)],
    suffix: &'a [u32],
    mid: Option<u32>,
    mid_lower: Option<u32>,
}

impl Codim4<'_> {
    fn recurse(&self, at: usize, left: u32, d: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) -> Result<(), ShapeError> {
        if left < self.suffix[at] + self.mid_lower.unwrap_or(0) {
            return Ok(());
        }
        if at == self.lower.len() {
            return self.finish(left, d, out);
        }
        let (j, lo) = self.lower[at];
        let hi = left - self.suffix[at + 1] - self.mid_lower.unwrap_or(0);
        for total in lo..=hi {
            for dj in 0..=total {
                d[j as usize] = dj;
                d[(self.k - j) as usize] = total - dj;
                self.recurse(at + 1, left - total, d, out)?;
            }
        }
        d[j as usize] = 0;
        d[(self.k - j) as usize] = 0;
        Ok(())
    }

    fn finish(&self, left: u32, d: &mut [u32], out: &mut Vec<Vec<u32>>) -> Result<(), ShapeError> {
        match self.mid {
            Some(m) => d[m as usize] = left,
            None if left > 0 => return Ok(()),
            None => {}
        }
        out.push(multiset(d));
        if let Some(m) = self.mid {
            d[m as usize] = 0;
        }
        if out.len() > MAX_SHAPES {
            Err(ShapeError::TooMany)
        } else {
            Ok(())
        }
    }
}

/// Exponents of the negative coefficients after the constant term, up to the first positive one.
pub(crate) fn leading_negative_block(n: &IntPolynomial) -> Vec<u32> {
    let mut out = Vec::new();
    for (e, c) in n.terms().skip_while(|(e, _)| *e == 0) {
        if c >= &BigInt::zero() {
            break;
        }
        let mult = (-c).to_usize().unwrap_or(0);
        out.extend(std::iter::repeat_n(e, mult));
    }
    out
}
