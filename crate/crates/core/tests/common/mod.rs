#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use graded_rings::pfaffian::{Ring, SparsePoly};
use num_bigint::BigInt;
use rand::Rng;

/// Number of monomials of degree `d` in variables of the given weights.
pub fn count_monomials(weights: &[u32], d: u32) -> u64 {
    fn go(w: &[u32], d: u32, memo: &mut BTreeMap<(usize, u32), u64>) -> u64 {
        if w.is_empty() {
            return (d == 0) as u64;
        }
        if let Some(&v) = memo.get(&(w.len(), d)) {
            return v;
        }
        let mut total = 0;
        let mut used = 0;
        while used <= d {
            total += go(&w[1..], d - used, memo);
            used += w[0];
        }
        memo.insert((w.len(), d), total);
        total
    }
    go(weights, d, &mut BTreeMap::new())
}

pub fn random_poly(ring: &Arc<Ring>, rng: &mut impl Rng, max_terms: usize, max_exp: u32) -> SparsePoly {
    let mut p = SparsePoly::zero(ring);
    for _ in 0..rng.gen_range(0..=max_terms) {
        let e: Vec<u32> = (0..ring.len()).map(|_| rng.gen_range(0..=max_exp)).collect();
        p.add_term(e, BigInt::from(rng.gen_range(-3i32..=3)));
    }
    p
}

pub fn eval(p: &SparsePoly, point: &[BigInt]) -> BigInt {
    p.terms().map(|(e, c)| e.iter().zip(point).fold(c.clone(), |acc, (k, x)| acc * x.pow(*k))).sum()
}

/// Pfaffian by expansion along the first row of a full antisymmetric matrix.
pub fn pfaffian_by_expansion(m: &[Vec<SparsePoly>], ring: &Arc<Ring>) -> SparsePoly {
    let n = m.len();
    if n == 0 {
        return SparsePoly::constant(ring, 1);
    }
    let mut total = SparsePoly::zero(ring);
    for j in 1..n {
        let keep: Vec<usize> = (1..n).filter(|&x| x != j).collect();
        let minor: Vec<Vec<SparsePoly>> =
            keep.iter().map(|&a| keep.iter().map(|&b| m[a][b].clone()).collect()).collect();
        let term = &m[0][j] * &pfaffian_by_expansion(&minor, ring);
        total = if j % 2 == 1 { &total + &term } else { &total - &term };
    }
    total
}
